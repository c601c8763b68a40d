//! Quantization and symbol maps between phase-space polynomials and operator
//! polynomials, the four families of s-parametrized Bopp operators, the Bopp
//! route to symbols, and the generator constructors realizing operator
//! monomials as differential operators.
//!
//! Association bookkeeping, fixed once here and used consistently: the symbol
//! map `symbol(A, s)` expands A over the s-ordered basis and replaces each
//! basis element by its monomial. The Bopp route with ordering r at basis
//! parameter s therefore pairs with `symbol(s_ordered(n, m, r), -s)`.

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::oppoly::{Algebra, OpPoly};
use crate::ordering::{convert_order, s_ordered, s_ordered_pair};
use crate::phasepoly::{Axis, PhasePoly, VarPair};
use crate::scalar::{Rat, Scalar};
use std::collections::BTreeMap;

/// Linear extension of monomial -> s-ordered product. Symbols on (q, p)
/// quantize over the canonical pair; symbols on the scaled complex Wigner
/// pair quantize over the boson pair.
pub fn quantize(f: &PhasePoly, s: &Scalar) -> Result<OpPoly> {
    let algebra = match f.vars() {
        VarPair::Qp => Algebra::Qp,
        VarPair::BigZ => Algebra::AAdag,
        other => {
            return Err(Error::Domain(format!(
                "quantize expects qp or Z_Zbar symbols, got {}",
                other.name()
            )))
        }
    };
    let mut acc = OpPoly::zero(algebra);
    for ((a, b), c) in f.terms() {
        acc = &acc + &s_ordered(*a, *b, s, algebra)?.scale(c);
    }
    Ok(acc)
}

/// Expand an operator polynomial over the s-ordered basis: the canonical
/// normal form is the s = 1 basis, and each monomial converts by a finite
/// triangular transform, so the expansion is exact and unique.
pub fn expand_ordered_basis(a: &OpPoly, s: &Scalar) -> BTreeMap<(u32, u32), Scalar> {
    let mut out: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
    for ((n, m), c) in a.terms() {
        for (k, conv) in convert_order(*n, *m, &Scalar::one(), s, a.algebra()).terms {
            let key = (n - k, m - k);
            let add = c * &conv;
            let entry = out.entry(key).or_default();
            let sum = &*entry + &add;
            if sum.is_zero() {
                out.remove(&key);
            } else {
                *entry = sum;
            }
        }
    }
    out
}

/// The s-symbol: inverse of [`quantize`] at the same parameter.
pub fn symbol(a: &OpPoly, s: &Scalar) -> PhasePoly {
    let vars = match a.algebra() {
        Algebra::Qp => VarPair::Qp,
        Algebra::AAdag => VarPair::BigZ,
    };
    let mut acc = PhasePoly::zero(vars);
    for ((n, m), c) in expand_ordered_basis(a, s) {
        acc = &acc
            + &PhasePoly::monomial(vars, n, m, c)
                .expect("symbol degrees never exceed the operator's");
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoppBasis {
    /// Displacement (Weyl) basis: operators act on (xi, eta) or (z, zbar).
    D,
    /// Displaced-parity (Wigner) basis: operators act on (q, p) or the
    /// scaled complex pair.
    Delta,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Which {
    Q,
    P,
}

/// Selects one s-parametrized Bopp operator.
#[derive(Clone, Debug)]
pub struct BoppSpec {
    pub basis: BoppBasis,
    pub side: Side,
    pub which: Which,
    pub s: Scalar,
    pub vars: VarPair,
}

fn half() -> Scalar {
    Scalar::from_rat(Rat::new(1.into(), 2.into()))
}

/// hbar (1 - s) / 2.
fn s_minus(s: &Scalar) -> Scalar {
    &(&Scalar::hbar() * &half()) * &(&Scalar::one() - s)
}

/// hbar (1 + s) / 2.
fn s_plus(s: &Scalar) -> Scalar {
    &(&Scalar::hbar() * &half()) * &(&Scalar::one() + s)
}

/// Construct one Bopp operator. The coordinate pair must belong to the
/// basis: (xi, eta) or (z, zbar) for the displacement basis, (q, p) or the
/// scaled complex pair for the displaced-parity basis.
pub fn bopp(spec: &BoppSpec) -> Result<DiffOp> {
    let BoppSpec { basis, side, which, s, vars } = spec;
    let ok = matches!(
        (basis, vars),
        (BoppBasis::D, VarPair::XiEta)
            | (BoppBasis::D, VarPair::SmallZ)
            | (BoppBasis::Delta, VarPair::Qp)
            | (BoppBasis::Delta, VarPair::BigZ)
    );
    if !ok {
        return Err(Error::Domain(format!(
            "Bopp basis {:?} does not act on {}",
            basis,
            vars.name()
        )));
    }
    let v = *vars;
    let own = match which {
        Which::Q => Axis::V1,
        Which::P => Axis::V2,
    };
    let other = match which {
        Which::Q => Axis::V2,
        Which::P => Axis::V1,
    };
    // Affine-part pattern shared by all four families: Q-left and P-right
    // carry -s^-, Q-right and P-left carry +s^+.
    let affine = match (which, side) {
        (Which::Q, Side::Left) | (Which::P, Side::Right) => -&s_minus(s),
        (Which::Q, Side::Right) | (Which::P, Side::Left) => s_plus(s),
    };
    let op = match (basis, vars) {
        // real Weyl basis: -i d_own + affine * (other variable)
        (BoppBasis::D, VarPair::XiEta) => {
            let deriv = DiffOp::deriv(v, own).scale(&-&Scalar::i());
            &deriv + &DiffOp::mul_var(v, other).scale(&affine)
        }
        // complex Weyl basis: d_own - (affine / hbar) * (other variable)
        (BoppBasis::D, VarPair::SmallZ) => {
            let c = -&(&affine.div_exact_i_hbar().expect("affine part carries hbar") * &Scalar::i());
            &DiffOp::deriv(v, own) + &DiffOp::mul_var(v, other).scale(&c)
        }
        // real Wigner basis: own variable + i * affine * d_other
        (BoppBasis::Delta, VarPair::Qp) => {
            let c = &Scalar::i() * &affine;
            &DiffOp::mul_var(v, own) + &DiffOp::deriv(v, other).scale(&c)
        }
        // scaled complex Wigner basis: own variable - (affine / hbar) * d_other
        (BoppBasis::Delta, VarPair::BigZ) => {
            let c = -&(&affine.div_exact_i_hbar().expect("affine part carries hbar") * &Scalar::i());
            &DiffOp::mul_var(v, own) + &DiffOp::deriv(v, other).scale(&c)
        }
        _ => unreachable!(),
    };
    Ok(op)
}

/// Convenience: the (Q, P) pair for one basis/side.
pub fn bopp_pair(
    basis: BoppBasis,
    side: Side,
    s: &Scalar,
    vars: VarPair,
) -> Result<(DiffOp, DiffOp)> {
    let q = bopp(&BoppSpec { basis, side, which: Which::Q, s: s.clone(), vars })?;
    let p = bopp(&BoppSpec { basis, side, which: Which::P, s: s.clone(), vars })?;
    Ok((q, p))
}

/// Symbol of the r-ordered product at basis parameter s via the left Bopp
/// route: the (-r)-ordered product of the left Bopp pair applied to 1.
pub fn bopp_symbol(n: u32, m: u32, r: &Scalar, s: &Scalar) -> Result<PhasePoly> {
    let (q, p) = bopp_pair(BoppBasis::Delta, Side::Left, s, VarPair::Qp)?;
    let op = s_ordered_pair(&q, &p, n, m, &-r)?;
    op.apply(&PhasePoly::one(VarPair::Qp))
}

/// The same symbol via the right Bopp route, with ordering +r.
pub fn bopp_symbol_right(n: u32, m: u32, r: &Scalar, s: &Scalar) -> Result<PhasePoly> {
    let (q, p) = bopp_pair(BoppBasis::Delta, Side::Right, s, VarPair::Qp)?;
    let op = s_ordered_pair(&q, &p, n, m, r)?;
    op.apply(&PhasePoly::one(VarPair::Qp))
}

/// Generator of the infinitesimal transformation induced on the Weyl basis
/// by the r-ordered product of indices (n, m):
/// {Q_L^n P_L^m}_{-r} - {Q_R^n P_R^m}_{r} on (xi, eta).
pub fn t_generator(n: u32, m: u32, r: &Scalar, s: &Scalar) -> Result<DiffOp> {
    let (ql, pl) = bopp_pair(BoppBasis::D, Side::Left, s, VarPair::XiEta)?;
    let (qr, pr) = bopp_pair(BoppBasis::D, Side::Right, s, VarPair::XiEta)?;
    let left = s_ordered_pair(&ql, &pl, n, m, &-r)?;
    let right = s_ordered_pair(&qr, &pr, n, m, r)?;
    Ok(&left - &right)
}

/// Same construction over the displaced-parity basis, acting on (q, p).
pub fn gamma_generator(n: u32, m: u32, r: &Scalar, s: &Scalar) -> Result<DiffOp> {
    let (ql, pl) = bopp_pair(BoppBasis::Delta, Side::Left, s, VarPair::Qp)?;
    let (qr, pr) = bopp_pair(BoppBasis::Delta, Side::Right, s, VarPair::Qp)?;
    let left = s_ordered_pair(&ql, &pl, n, m, &-r)?;
    let right = s_ordered_pair(&qr, &pr, n, m, r)?;
    Ok(&left - &right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sym_s() -> Scalar {
        Scalar::sym_s()
    }

    #[test]
    fn quantize_monomials() {
        // standard ordering sends q^n p^m to the plain operator monomial
        let f = PhasePoly::monomial(VarPair::Qp, 3, 2, Scalar::one()).unwrap();
        assert_eq!(
            quantize(&f, &Scalar::one()).unwrap(),
            OpPoly::monomial(Algebra::Qp, 3, 2, Scalar::one()).unwrap()
        );
        // Weyl ordering of qp
        let f = PhasePoly::monomial(VarPair::Qp, 1, 1, Scalar::one()).unwrap();
        assert_eq!(
            quantize(&f, &Scalar::zero()).unwrap(),
            s_ordered(1, 1, &Scalar::zero(), Algebra::Qp).unwrap()
        );
        // constants map to multiples of the identity
        let f = PhasePoly::constant(VarPair::Qp, Scalar::from_rat(rat(2, 5)));
        assert_eq!(
            quantize(&f, &sym_s()).unwrap(),
            OpPoly::one(Algebra::Qp).scale(&Scalar::from_rat(rat(2, 5)))
        );
    }

    #[test]
    fn symbol_examples() {
        // symbol of qp at s = 0 is qp + i hbar / 2
        let qp = OpPoly::monomial(Algebra::Qp, 1, 1, Scalar::one()).unwrap();
        let got = symbol(&qp, &Scalar::zero());
        let expected = &PhasePoly::monomial(VarPair::Qp, 1, 1, Scalar::one()).unwrap()
            + &PhasePoly::constant(
                VarPair::Qp,
                &Scalar::i_hbar() * &Scalar::from_rat(rat(1, 2)),
            );
        assert_eq!(got, expected);
        // identity has symbol 1 at any s
        assert_eq!(
            symbol(&OpPoly::one(Algebra::Qp), &sym_s()),
            PhasePoly::one(VarPair::Qp)
        );
        // symbol of the s-ordered product is the plain monomial
        for (n, m) in [(2, 1), (3, 3)] {
            let t = s_ordered(n, m, &sym_s(), Algebra::Qp).unwrap();
            assert_eq!(
                symbol(&t, &sym_s()),
                PhasePoly::monomial(VarPair::Qp, n, m, Scalar::one()).unwrap()
            );
        }
    }

    #[test]
    fn round_trip_small() {
        let s = sym_s();
        for (n, m) in [(0, 0), (1, 2), (3, 1)] {
            let f = PhasePoly::monomial(VarPair::Qp, n, m, Scalar::one()).unwrap();
            assert_eq!(symbol(&quantize(&f, &s).unwrap(), &s), f);
        }
        let a = OpPoly::monomial(Algebra::Qp, 2, 2, Scalar::one()).unwrap();
        assert_eq!(quantize(&symbol(&a, &s), &s).unwrap(), a);
    }

    #[test]
    fn boson_round_trip() {
        let s = sym_s();
        let f = PhasePoly::monomial(VarPair::BigZ, 2, 1, Scalar::i()).unwrap();
        let quantized = quantize(&f, &s).unwrap();
        assert_eq!(quantized.algebra(), Algebra::AAdag);
        assert_eq!(symbol(&quantized, &s), f);
    }

    #[test]
    fn delta_bopp_commutators() {
        let s = sym_s();
        let (ql, pl) = bopp_pair(BoppBasis::Delta, Side::Left, &s, VarPair::Qp).unwrap();
        let (qr, pr) = bopp_pair(BoppBasis::Delta, Side::Right, &s, VarPair::Qp).unwrap();
        let minus_i_hbar = DiffOp::one(VarPair::Qp).scale(&-&Scalar::i_hbar());
        assert_eq!(ql.commutator(&pl).unwrap(), minus_i_hbar);
        assert_eq!(qr.commutator(&pr).unwrap(), -&minus_i_hbar);
        // cross-side commutators vanish
        for (a, b) in [(&ql, &qr), (&ql, &pr), (&pl, &qr), (&pl, &pr)] {
            assert!(a.commutator(b).unwrap().is_zero());
        }
    }

    #[test]
    fn weyl_bopp_commutators() {
        let s = sym_s();
        let (ql, pl) = bopp_pair(BoppBasis::D, Side::Left, &s, VarPair::XiEta).unwrap();
        let (qr, pr) = bopp_pair(BoppBasis::D, Side::Right, &s, VarPair::XiEta).unwrap();
        let minus_i_hbar = DiffOp::one(VarPair::XiEta).scale(&-&Scalar::i_hbar());
        assert_eq!(ql.commutator(&pl).unwrap(), minus_i_hbar);
        assert_eq!(qr.commutator(&pr).unwrap(), -&minus_i_hbar);
    }

    #[test]
    fn complex_bopp_commutators() {
        let s = sym_s();
        // displacement basis, (z, zbar): [Q'_L, P'_L] = -1 = -[Q'_R, P'_R]
        let (ql, pl) = bopp_pair(BoppBasis::D, Side::Left, &s, VarPair::SmallZ).unwrap();
        let (qr, pr) = bopp_pair(BoppBasis::D, Side::Right, &s, VarPair::SmallZ).unwrap();
        let minus_one = DiffOp::one(VarPair::SmallZ).scale(&Scalar::from_int(-1));
        assert_eq!(ql.commutator(&pl).unwrap(), minus_one);
        assert_eq!(qr.commutator(&pr).unwrap(), -&minus_one);
        // displaced-parity basis, scaled complex pair: [Q'_L, P'_L] = 1
        let (ql, pl) = bopp_pair(BoppBasis::Delta, Side::Left, &s, VarPair::BigZ).unwrap();
        let (qr, pr) = bopp_pair(BoppBasis::Delta, Side::Right, &s, VarPair::BigZ).unwrap();
        let one = DiffOp::one(VarPair::BigZ);
        assert_eq!(ql.commutator(&pl).unwrap(), one);
        assert_eq!(qr.commutator(&pr).unwrap(), -&one);
    }

    #[test]
    fn basis_variable_mismatch_rejected() {
        let spec = BoppSpec {
            basis: BoppBasis::D,
            side: Side::Left,
            which: Which::Q,
            s: Scalar::zero(),
            vars: VarPair::Qp,
        };
        assert!(bopp(&spec).is_err());
    }

    #[test]
    fn bopp_symbol_examples() {
        // derivative-free case
        let got = bopp_symbol(1, 0, &Scalar::sym_r(), &sym_s()).unwrap();
        assert_eq!(got, PhasePoly::var(VarPair::Qp, Axis::V1));
        // (1,1) at r = s = 0 gives the bare monomial qp
        let got = bopp_symbol(1, 1, &Scalar::zero(), &Scalar::zero()).unwrap();
        let qp = PhasePoly::monomial(VarPair::Qp, 1, 1, Scalar::one()).unwrap();
        assert_eq!(got, qp);
        // (2,0) at r = 0, symbolic s stays q^2
        let got = bopp_symbol(2, 0, &Scalar::zero(), &sym_s()).unwrap();
        assert_eq!(
            got,
            PhasePoly::monomial(VarPair::Qp, 2, 0, Scalar::one()).unwrap()
        );
    }

    #[test]
    fn bopp_routes_and_symbol_pairing() {
        let r = Scalar::sym_r();
        let s = sym_s();
        for (n, m) in [(1, 1), (2, 1), (2, 2)] {
            let left = bopp_symbol(n, m, &r, &s).unwrap();
            let right = bopp_symbol_right(n, m, &r, &s).unwrap();
            assert_eq!(left, right, "routes differ at ({n},{m})");
            let via_symbol = symbol(&s_ordered(n, m, &r, Algebra::Qp).unwrap(), &-&s);
            assert_eq!(left, via_symbol, "symbol pairing differs at ({n},{m})");
        }
    }

    #[test]
    fn t_generator_low_rows() {
        let r = Scalar::sym_r();
        let s = sym_s();
        assert!(t_generator(0, 0, &r, &s).unwrap().is_zero());
        // T_10 = -hbar * eta
        let got = t_generator(1, 0, &r, &s).unwrap();
        assert_eq!(
            got,
            DiffOp::mul_var(VarPair::XiEta, Axis::V2).scale(&-&Scalar::hbar())
        );
        // T_01 = hbar * xi
        let got = t_generator(0, 1, &r, &s).unwrap();
        assert_eq!(
            got,
            DiffOp::mul_var(VarPair::XiEta, Axis::V1).scale(&Scalar::hbar())
        );
    }

    #[test]
    fn gamma_on_constants_is_the_route_difference() {
        // {Q_L^n P_L^m}_{-r} 1 and {Q_R^n P_R^m}_{+r} 1 are the two routes to
        // the same symbol, so the generator annihilates constants
        let r = Scalar::sym_r();
        let s = sym_s();
        for (n, m) in [(1, 0), (1, 1), (2, 1), (2, 2)] {
            let gamma = gamma_generator(n, m, &r, &s).unwrap();
            let on_one = gamma.apply(&PhasePoly::one(VarPair::Qp)).unwrap();
            let route_diff = &bopp_symbol(n, m, &r, &s).unwrap()
                - &bopp_symbol_right(n, m, &r, &s).unwrap();
            assert_eq!(on_one, route_diff);
            assert!(on_one.is_zero());
        }
    }

    #[test]
    fn gamma_generator_low_rows() {
        let s = sym_s();
        let zero = Scalar::zero();
        assert!(gamma_generator(0, 0, &zero, &s).unwrap().is_zero());
        // Gamma_10 = -i hbar d_p
        assert_eq!(
            gamma_generator(1, 0, &zero, &s).unwrap(),
            DiffOp::deriv(VarPair::Qp, Axis::V2).scale(&-&Scalar::i_hbar())
        );
        // Gamma_20 = -2 i hbar q d_p + s hbar^2 d_p^2
        let got = gamma_generator(2, 0, &zero, &s).unwrap();
        let expected = &DiffOp::monomial(
            VarPair::Qp,
            (1, 0, 0, 1),
            -&(&Scalar::from_int(2) * &Scalar::i_hbar()),
        )
        .unwrap()
            + &DiffOp::monomial(
                VarPair::Qp,
                (0, 0, 0, 2),
                &Scalar::sym_s() * &Scalar::hbar().pow(2),
            )
            .unwrap();
        assert_eq!(got, expected);
    }
}
