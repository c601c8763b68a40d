//! Commutative polynomial symbols on a two-variable phase space.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::degree_cap;
use crate::error::{Error, Result};
use crate::scalar::{fmt_sum, fmt_term, Coeff, Scalar};

/// Which coordinate pair a symbol lives on.
///
/// The complex Wigner-basis pair `BigZ` uses coordinates rescaled by
/// 1/(a0*sqrt(2)) relative to the raw complex combination of position and
/// momentum; in those units every map in this crate stays Gaussian-rational.
/// The first variable of `BigZ` is the conjugated one (paired with the
/// creation index), matching the index convention of the ordered products.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VarPair {
    /// (q, p) — real Wigner-basis coordinates.
    Qp,
    /// (xi, eta) — real Weyl-basis (Fourier) coordinates.
    XiEta,
    /// (z, zbar) — complex Weyl-basis coordinates.
    SmallZ,
    /// (Zbar, Z)/(a0*sqrt(2)) — scaled complex Wigner-basis coordinates.
    BigZ,
}

impl VarPair {
    pub fn name(self) -> &'static str {
        match self {
            VarPair::Qp => "qp",
            VarPair::XiEta => "xi_eta",
            VarPair::SmallZ => "z_zbar",
            VarPair::BigZ => "Z_Zbar",
        }
    }

    /// Display names of (first, second) variable.
    pub fn var_names(self) -> (&'static str, &'static str) {
        match self {
            VarPair::Qp => ("q", "p"),
            VarPair::XiEta => ("xi", "eta"),
            VarPair::SmallZ => ("z", "zb"),
            VarPair::BigZ => ("Zb", "Z"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    V1,
    V2,
}

/// Commutative polynomial with [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct PhasePoly {
    vars: VarPair,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl PhasePoly {
    pub fn zero(vars: VarPair) -> PhasePoly {
        PhasePoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: VarPair) -> PhasePoly {
        PhasePoly::raw(vars, 0, 0, Scalar::one())
    }

    pub fn var(vars: VarPair, axis: Axis) -> PhasePoly {
        match axis {
            Axis::V1 => PhasePoly::raw(vars, 1, 0, Scalar::one()),
            Axis::V2 => PhasePoly::raw(vars, 0, 1, Scalar::one()),
        }
    }

    pub fn constant(vars: VarPair, c: Scalar) -> PhasePoly {
        PhasePoly::raw(vars, 0, 0, c)
    }

    pub fn monomial(vars: VarPair, a: u32, b: u32, c: Scalar) -> Result<PhasePoly> {
        let cap = degree_cap();
        for e in [a, b] {
            if e > cap {
                return Err(Error::DegreeOverflow { got: e as u64, cap });
            }
        }
        Ok(PhasePoly::raw(vars, a, b, c))
    }

    fn raw(vars: VarPair, a: u32, b: u32, c: Scalar) -> PhasePoly {
        let mut p = PhasePoly::zero(vars);
        p.insert(a, b, c);
        p
    }

    fn insert(&mut self, a: u32, b: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> VarPair {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Scalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> PhasePoly {
        let mut out = PhasePoly::zero(self.vars);
        for ((a, b), v) in &self.terms {
            out.insert(*a, *b, v * c);
        }
        out
    }

    fn check_vars(&self, rhs: &PhasePoly) -> Result<()> {
        if self.vars != rhs.vars {
            return Err(Error::VarMismatch {
                left: self.vars.name(),
                right: rhs.vars.name(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &PhasePoly) -> Result<PhasePoly> {
        self.check_vars(rhs)?;
        let cap = degree_cap();
        let mut out = PhasePoly::zero(self.vars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                let (a, b) = (*a1 as u64 + *a2 as u64, *b1 as u64 + *b2 as u64);
                if a > cap as u64 || b > cap as u64 {
                    return Err(Error::DegreeOverflow { got: a.max(b), cap });
                }
                out.insert(a as u32, b as u32, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<PhasePoly> {
        let mut acc = PhasePoly::one(self.vars);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn checked_add(&self, rhs: &PhasePoly) -> Result<PhasePoly> {
        self.check_vars(rhs)?;
        Ok(self + rhs)
    }

    /// Partial derivative along one axis.
    pub fn deriv(&self, axis: Axis) -> PhasePoly {
        let mut out = PhasePoly::zero(self.vars);
        for ((a, b), c) in &self.terms {
            match axis {
                Axis::V1 if *a > 0 => out.insert(a - 1, *b, c * &Scalar::from_int(*a as i64)),
                Axis::V2 if *b > 0 => out.insert(*a, b - 1, c * &Scalar::from_int(*b as i64)),
                _ => {}
            }
        }
        out
    }

    pub fn div_exact_i_hbar(&self) -> Result<PhasePoly> {
        let mut out = PhasePoly::zero(self.vars);
        for ((a, b), c) in &self.terms {
            out.insert(*a, *b, c.div_exact_i_hbar()?);
        }
        Ok(out)
    }

    /// Keep only the hbar-independent part of every coefficient.
    pub fn hbar_free(&self) -> PhasePoly {
        self.map_scalars(|c| c.hbar_free())
    }

    pub fn min_hbar_pow(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.min_hbar_pow()).min()
    }

    pub fn subst_hbar(&self, v: &Coeff) -> PhasePoly {
        self.map_scalars(|c| c.subst_hbar(v))
    }

    pub fn subst_s(&self, v: &Coeff) -> PhasePoly {
        self.map_scalars(|c| c.subst_s(v))
    }

    pub fn subst_r(&self, v: &Coeff) -> PhasePoly {
        self.map_scalars(|c| c.subst_r(v))
    }

    fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> PhasePoly {
        let mut out = PhasePoly::zero(self.vars);
        for ((a, b), c) in &self.terms {
            out.insert(*a, *b, f(c));
        }
        out
    }
}

impl Add for &PhasePoly {
    type Output = PhasePoly;
    fn add(self, rhs: &PhasePoly) -> PhasePoly {
        assert_eq!(self.vars, rhs.vars, "variable mismatch in addition");
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.insert(*a, *b, c.clone());
        }
        out
    }
}

impl Sub for &PhasePoly {
    type Output = PhasePoly;
    fn sub(self, rhs: &PhasePoly) -> PhasePoly {
        assert_eq!(self.vars, rhs.vars, "variable mismatch in subtraction");
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.insert(*a, *b, -c);
        }
        out
    }
}

impl Neg for &PhasePoly {
    type Output = PhasePoly;
    fn neg(self) -> PhasePoly {
        let mut out = PhasePoly::zero(self.vars);
        for ((a, b), c) in &self.terms {
            out.insert(*a, *b, -c);
        }
        out
    }
}

impl fmt::Display for PhasePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v1, v2) = self.vars.var_names();
        let mut rendered = Vec::new();
        for ((a, b), c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            match *a {
                0 => {}
                1 => mono.push(v1.to_string()),
                k => mono.push(format!("{}^{}", v1, k)),
            }
            match *b {
                0 => {}
                1 => mono.push(v2.to_string()),
                k => mono.push(format!("{}^{}", v2, k)),
            }
            for (p, coeff) in c.terms().collect::<Vec<_>>().into_iter().rev() {
                rendered.push(fmt_term(coeff, p, &mono));
            }
        }
        fmt_sum(rendered, f)
    }
}

impl fmt::Debug for PhasePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhasePoly[{}]({})", self.vars.name(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> PhasePoly {
        PhasePoly::var(VarPair::Qp, Axis::V1)
    }
    fn p() -> PhasePoly {
        PhasePoly::var(VarPair::Qp, Axis::V2)
    }

    #[test]
    fn commutative_product() {
        let qp = q().mul(&p()).unwrap();
        let pq = p().mul(&q()).unwrap();
        assert_eq!(qp, pq);
        assert_eq!(qp.coeff(1, 1), Scalar::one());
    }

    #[test]
    fn derivative() {
        let q2 = q().pow(2).unwrap();
        assert_eq!(q2.deriv(Axis::V1), q().scale(&Scalar::from_int(2)));
        assert!(q2.deriv(Axis::V2).is_zero());
    }

    #[test]
    fn var_mismatch_rejected() {
        let xi = PhasePoly::var(VarPair::XiEta, Axis::V1);
        assert!(matches!(q().mul(&xi), Err(Error::VarMismatch { .. })));
    }

    #[test]
    fn display_round_shape() {
        let f = &q().pow(2).unwrap().mul(&p()).unwrap()
            - &q().scale(&(&Scalar::i() * &Scalar::hbar()));
        assert_eq!(f.to_string(), "q^2*p - i*hbar*q");
    }
}
