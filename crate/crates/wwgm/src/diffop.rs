//! Polynomial-coefficient differential operators on a two-variable phase
//! space, kept in the canonical form with every multiplication operator to
//! the left of every derivative:
//!
//!   sum of c * v1^a v2^b d1^c d2^d
//!
//! Composition rewrites derivative-past-multiplication factors with
//! [d_v, v] = 1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::combin::pairings;
use crate::degree_cap;
use crate::error::{Error, Result};
use crate::phasepoly::{Axis, PhasePoly, VarPair};
use crate::scalar::{fmt_sum, fmt_term, Coeff, Rat, Scalar};

/// Key (a, b, c, d): multiply by v1^a v2^b, then differentiate d1^c d2^d.
pub type DiffKey = (u32, u32, u32, u32);

#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    vars: VarPair,
    terms: BTreeMap<DiffKey, Scalar>,
}

impl DiffOp {
    pub fn zero(vars: VarPair) -> DiffOp {
        DiffOp { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: VarPair) -> DiffOp {
        DiffOp::raw(vars, (0, 0, 0, 0), Scalar::one())
    }

    /// Multiplication by one coordinate.
    pub fn mul_var(vars: VarPair, axis: Axis) -> DiffOp {
        match axis {
            Axis::V1 => DiffOp::raw(vars, (1, 0, 0, 0), Scalar::one()),
            Axis::V2 => DiffOp::raw(vars, (0, 1, 0, 0), Scalar::one()),
        }
    }

    /// Partial derivative along one coordinate.
    pub fn deriv(vars: VarPair, axis: Axis) -> DiffOp {
        match axis {
            Axis::V1 => DiffOp::raw(vars, (0, 0, 1, 0), Scalar::one()),
            Axis::V2 => DiffOp::raw(vars, (0, 0, 0, 1), Scalar::one()),
        }
    }

    pub fn monomial(vars: VarPair, key: DiffKey, c: Scalar) -> Result<DiffOp> {
        let cap = degree_cap();
        for e in [key.0, key.1, key.2, key.3] {
            if e > cap {
                return Err(Error::DegreeOverflow { got: e as u64, cap });
            }
        }
        Ok(DiffOp::raw(vars, key, c))
    }

    fn raw(vars: VarPair, key: DiffKey, c: Scalar) -> DiffOp {
        let mut d = DiffOp::zero(vars);
        d.insert(key, c);
        d
    }

    fn insert(&mut self, key: DiffKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&DiffKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: DiffKey) -> Scalar {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> DiffOp {
        let mut out = DiffOp::zero(self.vars);
        for (k, v) in &self.terms {
            out.insert(*k, v * c);
        }
        out
    }

    fn check_vars(&self, rhs: &DiffOp) -> Result<()> {
        if self.vars != rhs.vars {
            return Err(Error::VarMismatch {
                left: self.vars.name(),
                right: rhs.vars.name(),
            });
        }
        Ok(())
    }

    /// Operator composition self ∘ rhs in canonical form.
    pub fn compose(&self, rhs: &DiffOp) -> Result<DiffOp> {
        self.check_vars(rhs)?;
        let cap = degree_cap() as u64;
        let mut out = DiffOp::zero(self.vars);
        for ((a1, b1, c1, d1), s1) in &self.terms {
            for ((a2, b2, c2, d2), s2) in &rhs.terms {
                let bounds = [
                    *a1 as u64 + *a2 as u64,
                    *b1 as u64 + *b2 as u64,
                    *c1 as u64 + *c2 as u64,
                    *d1 as u64 + *d2 as u64,
                ];
                if let Some(&got) = bounds.iter().find(|&&e| e > cap) {
                    return Err(Error::DegreeOverflow { got, cap: degree_cap() });
                }
                let s12 = s1 * s2;
                // d1^c1 past v1^a2 and d2^d1 past v2^b2, independently.
                for j1 in 0..=(*c1).min(*a2) {
                    let w1 = Rat::from(BigInt::from(pairings(j1, *c1, *a2)));
                    for j2 in 0..=(*d1).min(*b2) {
                        let w2 = Rat::from(BigInt::from(pairings(j2, *d1, *b2)));
                        let weight = Scalar::from_rat(&w1 * &w2);
                        out.insert(
                            (
                                a1 + a2 - j1,
                                b1 + b2 - j2,
                                c1 + c2 - j1,
                                d1 + d2 - j2,
                            ),
                            &s12 * &weight,
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<DiffOp> {
        let mut acc = DiffOp::one(self.vars);
        for _ in 0..k {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, rhs: &DiffOp) -> Result<DiffOp> {
        Ok(&self.compose(rhs)? - &rhs.compose(self)?)
    }

    /// Apply to a polynomial symbol.
    pub fn apply(&self, f: &PhasePoly) -> Result<PhasePoly> {
        if self.vars != f.vars() {
            return Err(Error::VarMismatch {
                left: self.vars.name(),
                right: f.vars().name(),
            });
        }
        let cap = degree_cap() as u64;
        let mut out = PhasePoly::zero(self.vars);
        for ((a, b, c, d), s) in &self.terms {
            for ((fa, fb), fc) in f.terms() {
                if *c > *fa || *d > *fb {
                    continue;
                }
                let (oa, ob) = (
                    (*fa - *c) as u64 + *a as u64,
                    (*fb - *d) as u64 + *b as u64,
                );
                if oa > cap || ob > cap {
                    return Err(Error::DegreeOverflow { got: oa.max(ob), cap: degree_cap() });
                }
                // pairings(k, k, n) = n!/(n-k)!, the falling factorial
                let falling = pairings(*c, *c, *fa) * pairings(*d, *d, *fb);
                let weight = Scalar::from_rat(Rat::from(BigInt::from(falling)));
                let term = PhasePoly::monomial(self.vars, oa as u32, ob as u32, &(s * fc) * &weight)?;
                out = &out + &term;
            }
        }
        Ok(out)
    }

    pub fn subst_hbar(&self, v: &Coeff) -> DiffOp {
        self.map_scalars(|c| c.subst_hbar(v))
    }

    pub fn subst_s(&self, v: &Coeff) -> DiffOp {
        self.map_scalars(|c| c.subst_s(v))
    }

    pub fn subst_r(&self, v: &Coeff) -> DiffOp {
        self.map_scalars(|c| c.subst_r(v))
    }

    fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> DiffOp {
        let mut out = DiffOp::zero(self.vars);
        for (k, c) in &self.terms {
            out.insert(*k, f(c));
        }
        out
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        assert_eq!(self.vars, rhs.vars, "variable mismatch in addition");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, c.clone());
        }
        out
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        assert_eq!(self.vars, rhs.vars, "variable mismatch in subtraction");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, -c);
        }
        out
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        let mut out = DiffOp::zero(self.vars);
        for (k, c) in &self.terms {
            out.insert(*k, -c);
        }
        out
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (v1, v2) = self.vars.var_names();
        let (d1, d2) = (format!("d{}", v1), format!("d{}", v2));
        let mut rendered = Vec::new();
        for ((a, b, c, d), coeffs) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (name, k) in [(v1, *a), (v2, *b), (d1.as_str(), *c), (d2.as_str(), *d)] {
                match k {
                    0 => {}
                    1 => mono.push(name.to_string()),
                    k => mono.push(format!("{}^{}", name, k)),
                }
            }
            for (p, coeff) in coeffs.terms().collect::<Vec<_>>().into_iter().rev() {
                rendered.push(fmt_term(coeff, p, &mono));
            }
        }
        fmt_sum(rendered, f)
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp[{}]({})", self.vars.name(), self)
    }
}
