//! Property tests for the field, lattice and root-system engines.

use chevkit::finitefield::GaloisField;
use chevkit::intlinalg::IntMatrix;
use chevkit::lattices::{cokernel_torsion, IsogenyForm, TorsionTorusElement, TorusLattice};
use chevkit::rootsystem::RootSystem;
use proptest::prelude::*;

fn fields() -> Vec<GaloisField> {
    [(3, 4), (7, 2), (17, 1), (5, 3)]
        .into_iter()
        .map(|(p, k)| GaloisField::new(p, k).expect("valid field"))
        .collect()
}

fn permuted(c: &IntMatrix, perm: &[usize]) -> IntMatrix {
    perm.iter().map(|&i| perm.iter().map(|&j| c[i][j]).collect()).collect()
}

proptest! {
    #[test]
    fn field_axioms(which in 0usize..4, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[which];
        let (a, b, c) = (f.element(a % f.order()), f.element(b % f.order()), f.element(c % f.order()));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        let p = f.characteristic();
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, f.order() - 1), f.one());
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn fundamental_group_is_invariant_under_relabelling(perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let rs = RootSystem::e7();
        prop_assert_eq!(cokernel_torsion(&permuted(rs.cartan(), &perm)), vec![2]);
    }

    #[test]
    fn adjoint_equality_is_coarser_than_sc(u in prop::collection::vec(0i64..8, 7), v in prop::collection::vec(0i64..8, 7)) {
        let lat = TorusLattice::e7();
        let a = TorsionTorusElement::new(8, &u).unwrap();
        let b = TorsionTorusElement::new(8, &v).unwrap();
        let sc = lat.equal_in_form(&a, &b, IsogenyForm::SimplyConnected).unwrap();
        let ad = lat.equal_in_form(&a, &b, IsogenyForm::Adjoint).unwrap();
        prop_assert!(!sc || ad);
        // translating by the centre never changes the adjoint image
        let shifted = a.add(&lat.central_element_sc().rescale(8).unwrap()).unwrap();
        prop_assert_eq!(lat.adjoint_key(&shifted), lat.adjoint_key(&a));
    }

    #[test]
    fn element_orders_divide_the_modulus(u in prop::collection::vec(-40i64..40, 7), m in prop::sample::select(vec![2u64, 4, 8, 16])) {
        let lat = TorusLattice::e7();
        let a = TorsionTorusElement::new(m, &u).unwrap();
        let sc = lat.element_order(&a, IsogenyForm::SimplyConnected);
        let ad = lat.element_order(&a, IsogenyForm::Adjoint);
        prop_assert_eq!(m % sc, 0);
        prop_assert_eq!(sc % ad, 0);
        prop_assert!(a.scale(sc as i64).is_zero());
        prop_assert!(a.add(&a.inverse()).unwrap().is_zero());
    }

    #[test]
    fn reflections_permute_the_roots(i in 0usize..126, j in 0usize..126) {
        let rs = RootSystem::e7();
        let (beta, alpha) = (&rs.roots()[i], &rs.roots()[j]);
        let image = rs.reflect(beta, alpha).unwrap();
        prop_assert!(rs.contains(&image));
        prop_assert_eq!(&rs.reflect(&image, alpha).unwrap(), beta);
    }
}
