//! s-ordered products of the algebra generators, conversions between
//! ordering parameters, the brute-force symmetrization oracle, and Hermitian
//! combinations.
//!
//! The one-parameter ordering family interpolates standard (s = 1), Weyl
//! symmetric (s = 0) and antistandard (s = -1) arrangements of the canonical
//! pair — normal/antinormal for the boson pair. The ordered product of a
//! generic pair A, B with central commutator is the binomial average
//!
//!   {A^n B^m}_s = 2^-n * sum_j C(n,j) (1+s)^j (1-s)^(n-j) A^j B^m A^(n-j)
//!
//! and the dual form summing over B-splittings gives the same element.

use num_bigint::BigInt;

use crate::combin::{binomial, pairings};
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::oppoly::{Algebra, OpPoly};
use crate::scalar::{Coeff, Rat, Scalar};

/// Pairing count b(k, n, m) = C(n,k) * C(m,k) * k!.
pub fn b_coeff(k: u32, n: u32, m: u32) -> Result<num_bigint::BigUint> {
    if k > n.min(m) {
        return Err(Error::Domain(format!(
            "b({k}, {n}, {m}): k exceeds min(n, m)"
        )));
    }
    Ok(pairings(k, n, m))
}

/// Element of an algebra in which ordered binomial products make sense:
/// it can be multiplied, added, scaled by exact coefficients, and has a
/// multiplicative identity compatible with its own carrier metadata.
pub trait AlgebraElement: Clone {
    fn mul_elem(&self, rhs: &Self) -> Result<Self>;
    fn add_elem(&self, rhs: &Self) -> Self;
    fn scale_elem(&self, c: &Scalar) -> Self;
    fn one_elem(&self) -> Self;
}

impl AlgebraElement for OpPoly {
    fn mul_elem(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)
    }
    fn add_elem(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scale_elem(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn one_elem(&self) -> Self {
        OpPoly::one(self.algebra())
    }
}

impl AlgebraElement for DiffOp {
    fn mul_elem(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)
    }
    fn add_elem(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn scale_elem(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn one_elem(&self) -> Self {
        DiffOp::one(self.vars())
    }
}

/// Ordered product {A^n B^m}_s for any pair with a central commutator,
/// evaluated with the pair's own multiplication.
pub fn s_ordered_pair<T: AlgebraElement>(a: &T, b: &T, n: u32, m: u32, s: &Scalar) -> Result<T> {
    let one_plus = &Scalar::one() + s;
    let one_minus = &Scalar::one() - s;

    let mut a_pows: Vec<T> = vec![a.one_elem()];
    for _ in 0..n {
        a_pows.push(a_pows.last().unwrap().mul_elem(a)?);
    }
    let mut b_pow = a.one_elem();
    for _ in 0..m {
        b_pow = b_pow.mul_elem(b)?;
    }

    let mut acc = a.one_elem().scale_elem(&Scalar::zero());
    for j in 0..=n {
        let weight = &(&Scalar::from_rat(Rat::from(BigInt::from(binomial(n, j))))
            * &one_plus.pow(j))
            * &one_minus.pow(n - j);
        let word = a_pows[j as usize]
            .mul_elem(&b_pow)?
            .mul_elem(&a_pows[(n - j) as usize])?;
        acc = acc.add_elem(&word.scale_elem(&weight));
    }
    let half_n = Scalar::from_rat(Rat::new(BigInt::from(1), BigInt::from(2).pow(n)));
    Ok(acc.scale_elem(&half_n))
}

/// s-ordered product of the generators, via the sum over X-splittings.
pub fn s_ordered(n: u32, m: u32, s: &Scalar, algebra: Algebra) -> Result<OpPoly> {
    s_ordered_pair(&OpPoly::x(algebra), &OpPoly::y(algebra), n, m, s)
}

/// The same element via the dual sum over Y-splittings:
/// 2^-m * sum_k C(m,k) (1-s)^k (1+s)^(m-k) Y^k X^n Y^(m-k).
pub fn s_ordered_alt(n: u32, m: u32, s: &Scalar, algebra: Algebra) -> Result<OpPoly> {
    s_ordered_pair(&OpPoly::y(algebra), &OpPoly::x(algebra), m, n, &-s)
}

/// Expansion of an s-ordered product in the basis of s'-ordered products:
/// the k-th term couples to indices lowered by k on both sides.
#[derive(Clone, Debug)]
pub struct OrderExpansion {
    pub n: u32,
    pub m: u32,
    pub s_from: Scalar,
    pub s_to: Scalar,
    /// (k, coefficient of the (n-k, m-k) target-order product).
    pub terms: Vec<(u32, Scalar)>,
}

/// Expand the (s_from)-ordered product of indices (n, m) over the
/// (s_to)-ordered basis. The k-th coefficient is
/// 2^-k * b(k,n,m) * [lambda (s_from - s_to)]^k with lambda the algebra's
/// central commutator.
pub fn convert_order(
    n: u32,
    m: u32,
    s_from: &Scalar,
    s_to: &Scalar,
    algebra: Algebra,
) -> OrderExpansion {
    let step = &algebra.lambda() * &(s_from - s_to);
    let mut step_pow = Scalar::one();
    let mut terms = Vec::new();
    for k in 0..=n.min(m) {
        let half_k = Scalar::from_rat(Rat::new(BigInt::from(1), BigInt::from(2).pow(k)));
        let count = Scalar::from_rat(Rat::from(BigInt::from(pairings(k, n, m))));
        let coeff = &(&half_k * &count) * &step_pow;
        if !coeff.is_zero() {
            terms.push((k, coeff));
        }
        step_pow = &step_pow * &step;
    }
    OrderExpansion {
        n,
        m,
        s_from: s_from.clone(),
        s_to: s_to.clone(),
        terms,
    }
}

impl OrderExpansion {
    /// Substitute each target-order product back in, reproducing the source
    /// product as an operator polynomial.
    pub fn realize(&self, algebra: Algebra) -> Result<OpPoly> {
        let mut acc = OpPoly::zero(algebra);
        for (k, coeff) in &self.terms {
            let t = s_ordered(self.n - k, self.m - k, &self.s_to, algebra)?;
            acc = &acc + &t.scale(coeff);
        }
        Ok(acc)
    }
}

const SYMMETRIZE_GUARD: u32 = 12;

/// Average of all distinct words with n X-factors and m Y-factors,
/// normalized by the number of words. Independent of the binomial formulas:
/// each word is multiplied out generator by generator.
pub fn symmetrize_oracle(n: u32, m: u32, algebra: Algebra) -> Result<OpPoly> {
    let total = n + m;
    if total > SYMMETRIZE_GUARD {
        return Err(Error::SizeGuard {
            what: "word length n+m",
            got: total as u64,
            limit: SYMMETRIZE_GUARD as u64,
        });
    }
    let x = OpPoly::x(algebra);
    let y = OpPoly::y(algebra);
    let mut sum = OpPoly::zero(algebra);
    let mut count = 0u64;
    for mask in 0u32..(1 << total) {
        if mask.count_ones() != n {
            continue;
        }
        count += 1;
        let mut word = OpPoly::one(algebra);
        for pos in 0..total {
            let gen = if (mask >> pos) & 1 == 1 { &x } else { &y };
            word = word.mul(gen)?;
        }
        sum = &sum + &word;
    }
    Ok(sum.scale(&Scalar::from_rat(Rat::new(
        BigInt::from(1),
        BigInt::from(count),
    ))))
}

/// Hermitian combination alpha * t^(s)_nm + conj(alpha) * t^(-conj(s))_nm for
/// the canonical pair, or alpha * y^(s)_nm + conj(alpha) * y^(conj(s))_mn for
/// the boson pair. Requires a concrete ordering parameter.
pub fn hermitian_combo(
    n: u32,
    m: u32,
    s: &Coeff,
    alpha: &Coeff,
    algebra: Algebra,
) -> Result<OpPoly> {
    let alpha_bar = alpha.conj();
    let first = s_ordered(n, m, &Scalar::from_coeff(s.clone()), algebra)?;
    let second = match algebra {
        Algebra::Qp => s_ordered(n, m, &Scalar::from_coeff(-s.conj()), algebra)?,
        Algebra::AAdag => s_ordered(m, n, &Scalar::from_coeff(s.conj()), algebra)?,
    };
    Ok(&first.scale(&Scalar::from_coeff(alpha.clone()))
        + &second.scale(&Scalar::from_coeff(alpha_bar)))
}
