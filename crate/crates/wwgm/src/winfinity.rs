//! Structure of the operator algebra spanned by the r-ordered products and
//! its realization by differential operators on phase space: structure
//! constants, the bracket isomorphism with the s-Moyal algebra of monomials,
//! and the central-extension bookkeeping that separates the two.

use crate::correspondence::{expand_ordered_basis, gamma_generator};
use crate::diffop::DiffOp;
use crate::error::Result;
use crate::oppoly::{Algebra, OpPoly};
use crate::ordering::s_ordered;
use crate::phasepoly::{PhasePoly, VarPair};
use crate::scalar::Scalar;
use crate::star::moyal;

/// Exact expansion of a commutator of two r-ordered products back over the
/// r-ordered basis. The (0, 0) coefficient is the central part.
#[derive(Clone, Debug)]
pub struct StructureExpansion {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub l: u32,
    pub r: Scalar,
    /// ((a, b), coefficient of the (a, b) basis element), descending.
    pub terms: Vec<((u32, u32), Scalar)>,
}

impl StructureExpansion {
    /// Coefficient of the identity in the commutator.
    pub fn central(&self) -> Scalar {
        self.terms
            .iter()
            .find(|((a, b), _)| *a == 0 && *b == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }
}

/// Structure constants: [t^(r)_nm, t^(r)_kl] expanded over the t^(r) basis.
pub fn structure_expand(n: u32, m: u32, k: u32, l: u32, r: &Scalar) -> Result<StructureExpansion> {
    let t1 = s_ordered(n, m, r, Algebra::Qp)?;
    let t2 = s_ordered(k, l, r, Algebra::Qp)?;
    let comm = t1.commutator(&t2)?;
    let mut terms: Vec<_> = expand_ordered_basis(&comm, r).into_iter().collect();
    terms.reverse();
    Ok(StructureExpansion { n, m, k, l, r: r.clone(), terms })
}

/// Both sides of the bracket isomorphism for one index quadruple: the
/// generator with ordering s at basis parameter -s applied to a monomial,
/// against the s-Moyal bracket of the two monomials. Failure is reported,
/// not raised.
#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    pub lhs: PhasePoly,
    pub rhs: PhasePoly,
    pub difference: PhasePoly,
    pub pass: bool,
}

pub fn isomorphism_check(n: u32, m: u32, k: u32, l: u32, s: &Scalar) -> Result<IsomorphismReport> {
    let gamma = gamma_generator(n, m, s, &-s)?;
    let target = PhasePoly::monomial(VarPair::Qp, k, l, Scalar::one())?;
    let lhs = gamma.apply(&target)?;
    let source = PhasePoly::monomial(VarPair::Qp, n, m, Scalar::one())?;
    let rhs = moyal(&source, &target, s)?;
    let difference = &lhs - &rhs;
    let pass = difference.is_zero();
    Ok(IsomorphismReport { lhs, rhs, difference, pass })
}

/// Commutator of two generators against the image of the operator-side
/// structure constants. The generators realize the operator algebra up to
/// sign and up to the central part: the commutator must equal minus the
/// generator image of the non-central structure constants, and the dropped
/// identity coefficient is the central charge.
#[derive(Clone, Debug)]
pub struct CentralExtensionReport {
    pub commutator: DiffOp,
    pub expected: DiffOp,
    pub central_charge: Scalar,
    pub pass: bool,
}

pub fn central_extension_report(
    n: u32,
    m: u32,
    k: u32,
    l: u32,
    r: &Scalar,
    s: &Scalar,
) -> Result<CentralExtensionReport> {
    let g1 = gamma_generator(n, m, r, s)?;
    let g2 = gamma_generator(k, l, r, s)?;
    let commutator = g1.commutator(&g2)?;

    let expansion = structure_expand(n, m, k, l, r)?;
    let mut expected = DiffOp::zero(VarPair::Qp);
    for ((a, b), coeff) in &expansion.terms {
        if (*a, *b) == (0, 0) {
            continue;
        }
        expected = &expected - &gamma_generator(*a, *b, r, s)?.scale(coeff);
    }
    let pass = commutator == expected;
    Ok(CentralExtensionReport {
        commutator,
        expected,
        central_charge: expansion.central(),
        pass,
    })
}

/// One row of the generator table: the r-ordered operator product and its
/// differential-operator realization at basis parameter s.
#[derive(Clone, Debug)]
pub struct GeneratorRow {
    pub n: u32,
    pub m: u32,
    pub op: OpPoly,
    pub gamma: DiffOp,
}

pub fn generator_table(r: &Scalar, s: &Scalar, max_n: u32, max_m: u32) -> Result<Vec<GeneratorRow>> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        for m in 0..=max_m {
            rows.push(GeneratorRow {
                n,
                m,
                op: s_ordered(n, m, r, Algebra::Qp)?,
                gamma: gamma_generator(n, m, r, s)?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasepoly::Axis;
    use crate::scalar::rat;

    #[test]
    fn defining_relation_structure() {
        // [t_10, t_01] = i hbar t_00
        let e = structure_expand(1, 0, 0, 1, &Scalar::zero()).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].0, (0, 0));
        assert_eq!(e.terms[0].1, Scalar::i_hbar());
        assert_eq!(e.central(), Scalar::i_hbar());
    }

    #[test]
    fn weyl_structure_examples() {
        // [t^(0)_11, t^(0)_20] = -2 i hbar t^(0)_20
        let e = structure_expand(1, 1, 2, 0, &Scalar::zero()).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].0, (2, 0));
        assert_eq!(e.terms[0].1, -&(&Scalar::from_int(2) * &Scalar::i_hbar()));

        // [t^(0)_20, t^(0)_02] = 4 i hbar t^(0)_11
        let e = structure_expand(2, 0, 0, 2, &Scalar::zero()).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].0, (1, 1));
        assert_eq!(e.terms[0].1, &Scalar::from_int(4) * &Scalar::i_hbar());
    }

    #[test]
    fn isomorphism_samples() {
        let s = Scalar::sym_s();
        // degenerate row: {1, q^k p^l} = 0
        let rep = isomorphism_check(0, 0, 2, 1, &s).unwrap();
        assert!(rep.pass && rep.lhs.is_zero());
        // the workhorse example (2,0) against p^2
        let rep = isomorphism_check(2, 0, 0, 2, &s).unwrap();
        assert!(rep.pass, "difference: {}", rep.difference);
        let qp = PhasePoly::var(VarPair::Qp, Axis::V1)
            .mul(&PhasePoly::var(VarPair::Qp, Axis::V2))
            .unwrap();
        let expected = &qp.scale(&-&(&Scalar::from_int(4) * &Scalar::i_hbar()))
            - &PhasePoly::constant(
                VarPair::Qp,
                &(&Scalar::from_int(2) * &Scalar::sym_s()) * &Scalar::hbar().pow(2),
            );
        assert_eq!(rep.lhs, expected);
    }

    #[test]
    fn central_extension_exhibits_charge() {
        // [Gamma_10, Gamma_01] = 0 while [t_10, t_01] = i hbar: pure center
        let rep =
            central_extension_report(1, 0, 0, 1, &Scalar::zero(), &Scalar::sym_s()).unwrap();
        assert!(rep.pass);
        assert!(rep.commutator.is_zero());
        assert_eq!(rep.central_charge, Scalar::i_hbar());

        // bracket with itself: everything vanishes
        let rep =
            central_extension_report(2, 1, 2, 1, &Scalar::sym_r(), &Scalar::sym_s()).unwrap();
        assert!(rep.pass && rep.commutator.is_zero() && rep.central_charge.is_zero());

        // charge-free case from the structure example
        let rep =
            central_extension_report(1, 1, 2, 0, &Scalar::zero(), &Scalar::sym_s()).unwrap();
        assert!(rep.pass);
        assert!(rep.central_charge.is_zero());
        let gamma20 = gamma_generator(2, 0, &Scalar::zero(), &Scalar::sym_s()).unwrap();
        assert_eq!(
            rep.commutator,
            gamma20.scale(&(&Scalar::from_int(2) * &Scalar::i_hbar()))
        );
    }

    #[test]
    fn table_row_shapes() {
        let rows = generator_table(&Scalar::zero(), &Scalar::sym_s(), 2, 2).unwrap();
        assert_eq!(rows.len(), 9);
        let row11 = rows.iter().find(|r| (r.n, r.m) == (1, 1)).unwrap();
        // op side: qp - i hbar / 2
        let expected = &OpPoly::monomial(Algebra::Qp, 1, 1, Scalar::one()).unwrap()
            - &OpPoly::one(Algebra::Qp).scale(&(&Scalar::i_hbar() * &Scalar::from_rat(rat(1, 2))));
        assert_eq!(row11.op, expected);
        // gamma side: i hbar (q d_q - p d_p)
        let expected = &DiffOp::monomial(VarPair::Qp, (1, 0, 1, 0), Scalar::i_hbar()).unwrap()
            + &DiffOp::monomial(VarPair::Qp, (0, 1, 0, 1), -&Scalar::i_hbar()).unwrap();
        assert_eq!(row11.gamma, expected);
    }
}
