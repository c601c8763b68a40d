//! Noncommutative polynomials in two generators X, Y with a central
//! commutator [X, Y] = lambda. Everything is kept in the canonical normal
//! form sum of c_{nm} X^n Y^m.
//!
//! Two instances are supported: the canonical pair (X = position,
//! Y = momentum, lambda = i*hbar) and the boson pair (X = creation,
//! Y = annihilation, lambda = -1).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::combin::pairings;
use crate::degree_cap;
use crate::error::{Error, Result};
use crate::scalar::{fmt_sum, fmt_term, Coeff, Rat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Algebra {
    /// [X, Y] = i*hbar, the position/momentum pair.
    Qp,
    /// [X, Y] = -1, the creation/annihilation pair (X = a-dagger, Y = a).
    AAdag,
}

impl Algebra {
    pub fn lambda(self) -> Scalar {
        match self {
            Algebra::Qp => Scalar::i_hbar(),
            Algebra::AAdag => Scalar::from_int(-1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Qp => "qp",
            Algebra::AAdag => "aadag",
        }
    }

    fn symbols(self) -> (&'static str, &'static str) {
        match self {
            Algebra::Qp => ("Q", "P"),
            Algebra::AAdag => ("Ad", "A"),
        }
    }
}

/// Operator polynomial in canonical normal form (all X left of all Y).
#[derive(Clone, PartialEq, Eq)]
pub struct OpPoly {
    algebra: Algebra,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl OpPoly {
    pub fn zero(algebra: Algebra) -> OpPoly {
        OpPoly { algebra, terms: BTreeMap::new() }
    }

    pub fn one(algebra: Algebra) -> OpPoly {
        OpPoly::raw(algebra, 0, 0, Scalar::one())
    }

    /// The generator X (position, or creation).
    pub fn x(algebra: Algebra) -> OpPoly {
        OpPoly::raw(algebra, 1, 0, Scalar::one())
    }

    /// The generator Y (momentum, or annihilation).
    pub fn y(algebra: Algebra) -> OpPoly {
        OpPoly::raw(algebra, 0, 1, Scalar::one())
    }

    pub fn monomial(algebra: Algebra, n: u32, m: u32, c: Scalar) -> Result<OpPoly> {
        let cap = degree_cap();
        for e in [n, m] {
            if e > cap {
                return Err(Error::DegreeOverflow { got: e as u64, cap });
            }
        }
        Ok(OpPoly::raw(algebra, n, m, c))
    }

    fn raw(algebra: Algebra, n: u32, m: u32, c: Scalar) -> OpPoly {
        let mut p = OpPoly::zero(algebra);
        p.insert(n, m, c);
        p
    }

    fn insert(&mut self, n: u32, m: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((n, m)) {
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

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, n: u32, m: u32) -> Scalar {
        self.terms.get(&(n, m)).cloned().unwrap_or_default()
    }

    /// Coefficient of the identity component.
    pub fn identity_coeff(&self) -> Scalar {
        self.coeff(0, 0)
    }

    pub fn degree(&self) -> (u32, u32) {
        let mut d = (0, 0);
        for (n, m) in self.terms.keys() {
            d.0 = d.0.max(*n);
            d.1 = d.1.max(*m);
        }
        d
    }

    pub fn scale(&self, c: &Scalar) -> OpPoly {
        let mut out = OpPoly::zero(self.algebra);
        for ((n, m), v) in &self.terms {
            out.insert(*n, *m, v * c);
        }
        out
    }

    fn check_algebra(&self, rhs: &OpPoly) -> Result<()> {
        if self.algebra != rhs.algebra {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.name(),
                right: rhs.algebra.name(),
            });
        }
        Ok(())
    }

    /// Product in canonical normal form. The cross factor Y^a X^b is
    /// rewritten with the closed pairing formula for a central commutator.
    pub fn mul(&self, rhs: &OpPoly) -> Result<OpPoly> {
        self.check_algebra(rhs)?;
        let cap = degree_cap();
        let minus_lambda = -&self.algebra.lambda();
        let mut out = OpPoly::zero(self.algebra);
        for ((n1, m1), c1) in &self.terms {
            for ((n2, m2), c2) in &rhs.terms {
                let (n_tot, m_tot) = (*n1 as u64 + *n2 as u64, *m1 as u64 + *m2 as u64);
                if n_tot > cap as u64 || m_tot > cap as u64 {
                    return Err(Error::DegreeOverflow { got: n_tot.max(m_tot), cap });
                }
                let c12 = c1 * c2;
                let mut lam_pow = Scalar::one();
                for j in 0..=(*m1).min(*n2) {
                    let count = Scalar::from_rat(Rat::from(BigInt::from(pairings(j, *m1, *n2))));
                    out.insert(
                        n1 + n2 - j,
                        m1 + m2 - j,
                        &(&c12 * &count) * &lam_pow,
                    );
                    lam_pow = &lam_pow * &minus_lambda;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<OpPoly> {
        let mut acc = OpPoly::one(self.algebra);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn checked_add(&self, rhs: &OpPoly) -> Result<OpPoly> {
        self.check_algebra(rhs)?;
        Ok(self + rhs)
    }

    pub fn commutator(&self, rhs: &OpPoly) -> Result<OpPoly> {
        Ok(&self.mul(rhs)? - &rhs.mul(self)?)
    }

    /// Hermitian conjugate: reverse each word, conjugate each coefficient
    /// (hbar treated real), and re-normal-order. For the boson pair the
    /// generators swap under dagger; for the canonical pair they are
    /// self-adjoint. Errors while a formal ordering parameter is present.
    pub fn adjoint(&self) -> Result<OpPoly> {
        self.adjoint_with(Scalar::conjugate)
    }

    /// Adjoint under the real-parameter convention: the formal ordering
    /// parameters are conjugation-invariant.
    pub fn adjoint_ordering_real(&self) -> OpPoly {
        self.adjoint_with(|c| Ok(c.conjugate_ordering_real()))
            .expect("real-parameter conjugation is total")
    }

    fn adjoint_with(&self, conj: impl Fn(&Scalar) -> Result<Scalar>) -> Result<OpPoly> {
        let mut out = OpPoly::zero(self.algebra);
        match self.algebra {
            // (X^n Y^m)^† = Y^m X^n, reordered to normal form.
            Algebra::Qp => {
                let minus_lambda = -&self.algebra.lambda();
                for ((n, m), c) in &self.terms {
                    let cbar = conj(c)?;
                    let mut lam_pow = Scalar::one();
                    for j in 0..=(*m).min(*n) {
                        let count = Scalar::from_rat(Rat::from(BigInt::from(pairings(j, *m, *n))));
                        out.insert(n - j, m - j, &(&cbar * &count) * &lam_pow);
                        lam_pow = &lam_pow * &minus_lambda;
                    }
                }
            }
            // (X^n Y^m)^† = X^m Y^n: already normal-ordered.
            Algebra::AAdag => {
                for ((n, m), c) in &self.terms {
                    out.insert(*m, *n, conj(c)?);
                }
            }
        }
        Ok(out)
    }

    /// Substitute X -> X + cx, Y -> Y + cy with central shifts cx, cy.
    pub fn shift_generators(&self, cx: &Scalar, cy: &Scalar) -> OpPoly {
        let mut out = OpPoly::zero(self.algebra);
        for ((n, m), c) in &self.terms {
            let mut cx_pow = vec![Scalar::one()];
            for _ in 0..*n {
                cx_pow.push(cx_pow.last().unwrap() * cx);
            }
            let mut cy_pow = vec![Scalar::one()];
            for _ in 0..*m {
                cy_pow.push(cy_pow.last().unwrap() * cy);
            }
            for i in 0..=*n {
                for j in 0..=*m {
                    let cnt = crate::combin::binomial(*n, i) * crate::combin::binomial(*m, j);
                    let w = Scalar::from_rat(Rat::from(BigInt::from(cnt)));
                    out.insert(
                        i,
                        j,
                        &(&(c * &w) * &cx_pow[(*n - i) as usize]) * &cy_pow[(*m - j) as usize],
                    );
                }
            }
        }
        out
    }

    pub fn subst_hbar(&self, v: &Coeff) -> OpPoly {
        self.map_scalars(|c| c.subst_hbar(v))
    }

    pub fn subst_s(&self, v: &Coeff) -> OpPoly {
        self.map_scalars(|c| c.subst_s(v))
    }

    pub fn subst_r(&self, v: &Coeff) -> OpPoly {
        self.map_scalars(|c| c.subst_r(v))
    }

    fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> OpPoly {
        let mut out = OpPoly::zero(self.algebra);
        for ((n, m), c) in &self.terms {
            out.insert(*n, *m, f(c));
        }
        out
    }
}

impl Add for &OpPoly {
    type Output = OpPoly;
    fn add(self, rhs: &OpPoly) -> OpPoly {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch in addition");
        let mut out = self.clone();
        for ((n, m), c) in &rhs.terms {
            out.insert(*n, *m, c.clone());
        }
        out
    }
}

impl Sub for &OpPoly {
    type Output = OpPoly;
    fn sub(self, rhs: &OpPoly) -> OpPoly {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch in subtraction");
        let mut out = self.clone();
        for ((n, m), c) in &rhs.terms {
            out.insert(*n, *m, -c);
        }
        out
    }
}

impl Neg for &OpPoly {
    type Output = OpPoly;
    fn neg(self) -> OpPoly {
        let mut out = OpPoly::zero(self.algebra);
        for ((n, m), c) in &self.terms {
            out.insert(*n, *m, -c);
        }
        out
    }
}

impl fmt::Display for OpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (xs, ys) = self.algebra.symbols();
        let mut rendered = Vec::new();
        for ((n, m), c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            match *n {
                0 => {}
                1 => mono.push(xs.to_string()),
                k => mono.push(format!("{}^{}", xs, k)),
            }
            match *m {
                0 => {}
                1 => mono.push(ys.to_string()),
                k => mono.push(format!("{}^{}", ys, k)),
            }
            for (p, coeff) in c.terms().collect::<Vec<_>>().into_iter().rev() {
                rendered.push(fmt_term(coeff, p, &mono));
            }
        }
        fmt_sum(rendered, f)
    }
}

impl fmt::Debug for OpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpPoly[{}]({})", self.algebra.name(), self)
    }
}
