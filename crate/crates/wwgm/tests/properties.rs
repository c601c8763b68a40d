//! Property tests over randomized carriers.

use proptest::prelude::*;

use wwgm::correspondence::{quantize, symbol};
use wwgm::diffop::DiffOp;
use wwgm::oppoly::{Algebra, OpPoly};
use wwgm::phasepoly::{PhasePoly, VarPair};
use wwgm::scalar::{rat, Coeff, Powers, Scalar};
use wwgm::star::{moyal, star};

fn arb_coeff() -> impl Strategy<Value = Coeff> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
        .prop_map(|(a, b, c, d)| Coeff::new(rat(a, b), rat(c, d)))
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec((0u32..2, 0u32..2, arb_coeff()), 1..3).prop_map(|terms| {
        let mut s = Scalar::zero();
        for (h, sp, c) in terms {
            s = &s + &Scalar::term(Powers { hbar: h, s: sp, r: 0 }, c);
        }
        s
    })
}

fn arb_oppoly(algebra: Algebra) -> impl Strategy<Value = OpPoly> {
    proptest::collection::vec((0u32..4, 0u32..4, arb_scalar()), 1..4).prop_map(move |terms| {
        let mut p = OpPoly::zero(algebra);
        for (n, m, c) in terms {
            p = &p + &OpPoly::monomial(algebra, n, m, c).unwrap();
        }
        p
    })
}

fn arb_phasepoly() -> impl Strategy<Value = PhasePoly> {
    proptest::collection::vec((0u32..3, 0u32..3, arb_coeff()), 1..4).prop_map(|terms| {
        let mut p = PhasePoly::zero(VarPair::Qp);
        for (a, b, c) in terms {
            p = &p + &PhasePoly::monomial(VarPair::Qp, a, b, Scalar::from_coeff(c)).unwrap();
        }
        p
    })
}

fn arb_diffop() -> impl Strategy<Value = DiffOp> {
    proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), arb_scalar()), 1..3)
        .prop_map(|terms| {
            let mut d = DiffOp::zero(VarPair::Qp);
            for (key, c) in terms {
                d = &d + &DiffOp::monomial(VarPair::Qp, key, c).unwrap();
            }
            d
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_is_a_commutative_ring(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn operator_product_is_associative(
        a in arb_oppoly(Algebra::Qp),
        b in arb_oppoly(Algebra::Qp),
        c in arb_oppoly(Algebra::Qp),
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn boson_product_is_associative(
        a in arb_oppoly(Algebra::AAdag),
        b in arb_oppoly(Algebra::AAdag),
        c in arb_oppoly(Algebra::AAdag),
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn adjoint_is_an_involution(a in arb_oppoly(Algebra::Qp)) {
        // strip the formal ordering parameter so conjugation is defined
        let concrete = a.subst_s(&Coeff::new(rat(1, 3), rat(0, 1)));
        prop_assert_eq!(concrete.adjoint().unwrap().adjoint().unwrap(), concrete);
    }

    #[test]
    fn adjoint_reverses_products(
        a in arb_oppoly(Algebra::Qp),
        b in arb_oppoly(Algebra::Qp),
    ) {
        let a = a.subst_s(&Coeff::new(rat(0, 1), rat(0, 1)));
        let b = b.subst_s(&Coeff::new(rat(0, 1), rat(0, 1)));
        let lhs = a.mul(&b).unwrap().adjoint().unwrap();
        let rhs = b.adjoint().unwrap().mul(&a.adjoint().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn diffop_composition_is_application(
        d1 in arb_diffop(),
        d2 in arb_diffop(),
        f in arb_phasepoly(),
    ) {
        let composed = d1.compose(&d2).unwrap().apply(&f).unwrap();
        let sequential = d1.apply(&d2.apply(&f).unwrap()).unwrap();
        prop_assert_eq!(composed, sequential);
    }

    #[test]
    fn star_is_associative(
        f in arb_phasepoly(),
        g in arb_phasepoly(),
        h in arb_phasepoly(),
    ) {
        let s = Scalar::sym_s();
        let left = star(&star(&f, &g, &s).unwrap(), &h, &s).unwrap();
        let right = star(&f, &star(&g, &h, &s).unwrap(), &s).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bracket_is_antisymmetric_and_hbar_divisible(
        f in arb_phasepoly(),
        g in arb_phasepoly(),
    ) {
        let s = Scalar::sym_s();
        let fg = moyal(&f, &g, &s).unwrap();
        let gf = moyal(&g, &f, &s).unwrap();
        prop_assert!((&fg + &gf).is_zero());
        prop_assert!(fg.div_exact_i_hbar().is_ok());
    }

    #[test]
    fn quantize_symbol_round_trip(f in arb_phasepoly()) {
        let s = Scalar::sym_s();
        let round = symbol(&quantize(&f, &s).unwrap(), &s);
        prop_assert_eq!(round, f);
    }
}
