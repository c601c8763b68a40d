//! Exact coefficient ring: Gaussian-rational polynomials in the formal units
//! `hbar` and the two ordering parameters `s` and `r`.
//!
//! Every arithmetic operation is exact; nothing is ever rounded. Substituting
//! concrete Gaussian-rational values for `s`, `r`, or `hbar` stays inside the
//! ring. Conjugation treats `hbar` as real; the ordering parameters have no
//! canonical conjugate while formal, so [`Scalar::conjugate`] refuses them and
//! [`Scalar::conjugate_ordering_real`] applies the real-parameter convention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;
/// Gaussian rational: exact complex number with rational real and imaginary parts.
pub type Coeff = Complex<Rat>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn coeff_int(n: i64) -> Coeff {
    Coeff::new(rat(n, 1), Rat::zero())
}

pub fn coeff_rat(re: Rat) -> Coeff {
    Coeff::new(re, Rat::zero())
}

pub fn coeff_i() -> Coeff {
    Coeff::new(Rat::zero(), Rat::one())
}

pub fn coeff_pow(c: &Coeff, k: u32) -> Coeff {
    let mut acc = coeff_int(1);
    for _ in 0..k {
        acc *= c.clone();
    }
    acc
}

/// Exponents of the three formal units carried by a scalar term.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct Powers {
    pub hbar: u32,
    pub s: u32,
    pub r: u32,
}

impl Powers {
    pub fn hbar(k: u32) -> Powers {
        Powers { hbar: k, s: 0, r: 0 }
    }

    fn checked_add(self, other: Powers) -> Powers {
        Powers {
            hbar: self.hbar.checked_add(other.hbar).expect("hbar exponent overflow"),
            s: self.s.checked_add(other.s).expect("s exponent overflow"),
            r: self.r.checked_add(other.r).expect("r exponent overflow"),
        }
    }
}

/// Multivariate polynomial in (`hbar`, `s`, `r`) over the Gaussian rationals.
///
/// Stored sparsely; no term with a zero coefficient is ever kept, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    terms: BTreeMap<Powers, Coeff>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_coeff(coeff_int(n))
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar::from_coeff(coeff_rat(r))
    }

    pub fn from_coeff(c: Coeff) -> Scalar {
        Scalar::term(Powers::default(), c)
    }

    /// The imaginary unit.
    pub fn i() -> Scalar {
        Scalar::from_coeff(coeff_i())
    }

    /// The formal unit hbar.
    pub fn hbar() -> Scalar {
        Scalar::term(Powers { hbar: 1, s: 0, r: 0 }, coeff_int(1))
    }

    /// The formal ordering parameter s.
    pub fn sym_s() -> Scalar {
        Scalar::term(Powers { hbar: 0, s: 1, r: 0 }, coeff_int(1))
    }

    /// The second formal ordering parameter r.
    pub fn sym_r() -> Scalar {
        Scalar::term(Powers { hbar: 0, s: 0, r: 1 }, coeff_int(1))
    }

    /// i*hbar, the central commutator of the canonical pair.
    pub fn i_hbar() -> Scalar {
        Scalar::term(Powers { hbar: 1, s: 0, r: 0 }, coeff_i())
    }

    pub fn term(p: Powers, c: Coeff) -> Scalar {
        let mut s = Scalar::default();
        s.insert(p, c);
        s
    }

    fn insert(&mut self, p: Powers, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant().is_some_and(|c| c.is_one())
    }

    /// Concrete value when no formal unit remains (zero counts as concrete).
    pub fn constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (p, c) = self.terms.iter().next().unwrap();
                (*p == Powers::default()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Powers, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation with hbar treated as real. Errors if a formal
    /// ordering parameter is still present.
    pub fn conjugate(&self) -> Result<Scalar> {
        if self.terms.keys().any(|p| p.s > 0 || p.r > 0) {
            return Err(Error::SymbolicConjugation);
        }
        Ok(self.conjugate_ordering_real())
    }

    /// Complex conjugation treating hbar and both formal ordering parameters
    /// as real variables.
    pub fn conjugate_ordering_real(&self) -> Scalar {
        let mut out = Scalar::default();
        for (p, c) in &self.terms {
            out.insert(*p, c.conj());
        }
        out
    }

    pub fn subst_hbar(&self, v: &Coeff) -> Scalar {
        self.subst(|p| (Powers { hbar: 0, ..*p }, p.hbar), v)
    }

    pub fn subst_s(&self, v: &Coeff) -> Scalar {
        self.subst(|p| (Powers { s: 0, ..*p }, p.s), v)
    }

    pub fn subst_r(&self, v: &Coeff) -> Scalar {
        self.subst(|p| (Powers { r: 0, ..*p }, p.r), v)
    }

    fn subst(&self, split: impl Fn(&Powers) -> (Powers, u32), v: &Coeff) -> Scalar {
        let mut out = Scalar::default();
        for (p, c) in &self.terms {
            let (rest, k) = split(p);
            out.insert(rest, c.clone() * coeff_pow(v, k));
        }
        out
    }

    /// Exact division by i*hbar. Every term must carry at least one hbar.
    pub fn div_exact_i_hbar(&self) -> Result<Scalar> {
        let mut out = Scalar::default();
        let minus_i = Coeff::new(Rat::zero(), -Rat::one());
        for (p, c) in &self.terms {
            if p.hbar == 0 {
                return Err(Error::NotDivisibleByHbar);
            }
            out.insert(Powers { hbar: p.hbar - 1, ..*p }, c.clone() * minus_i.clone());
        }
        Ok(out)
    }

    /// The hbar-independent part (terms with hbar exponent zero).
    pub fn hbar_free(&self) -> Scalar {
        let mut out = Scalar::default();
        for (p, c) in &self.terms {
            if p.hbar == 0 {
                out.insert(*p, c.clone());
            }
        }
        out
    }

    pub fn min_hbar_pow(&self) -> Option<u32> {
        self.terms.keys().map(|p| p.hbar).min()
    }

    /// Numeric value; requires all formal units substituted away.
    pub fn to_complex_f64(&self) -> Result<num_complex::Complex64> {
        let c = self.constant().ok_or_else(|| {
            let p = self.terms.keys().next().copied().unwrap_or_default();
            let unit = if p.hbar > 0 { "hbar" } else if p.s > 0 { "s" } else { "r" };
            Error::SymbolicScalar { unit }
        })?;
        let re = c.re.to_f64().ok_or(Error::Domain("rational out of f64 range".into()))?;
        let im = c.im.to_f64().ok_or(Error::Domain("rational out of f64 range".into()))?;
        Ok(num_complex::Complex64::new(re, im))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.insert(*p, c.clone());
        }
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.insert(*p, -c.clone());
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = Scalar::default();
        for (p, c) in &self.terms {
            out.insert(*p, -c.clone());
        }
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::default();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &rhs.terms {
                out.insert(p1.checked_add(*p2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render one Gaussian rational as (sign, magnitude-string), where the
/// magnitude re-parses as a factor of the expression grammar.
pub(crate) fn fmt_coeff(c: &Coeff) -> (bool, String) {
    if c.im.is_zero() {
        (c.re.is_negative(), fmt_rat(&c.re.abs()))
    } else if c.re.is_zero() {
        let mag = c.im.abs();
        if mag.is_one() {
            (c.im.is_negative(), "i".to_string())
        } else {
            (c.im.is_negative(), format!("{}*i", fmt_rat(&mag)))
        }
    } else {
        let im_sign = if c.im.is_negative() { "-" } else { "+" };
        let im_mag = c.im.abs();
        let im_str = if im_mag.is_one() { "i".to_string() } else { format!("{}*i", fmt_rat(&im_mag)) };
        (false, format!("({}{}{})", fmt_rat(&c.re), im_sign, im_str))
    }
}

fn push_pow(parts: &mut Vec<String>, name: &str, k: u32) {
    match k {
        0 => {}
        1 => parts.push(name.to_string()),
        _ => parts.push(format!("{}^{}", name, k)),
    }
}

/// Render a term `coeff * mono_units` where `extra` appends carrier variables.
pub(crate) fn fmt_term(c: &Coeff, p: &Powers, extra: &[String]) -> (bool, String) {
    let (neg, coeff_str) = fmt_coeff(c);
    let mut parts: Vec<String> = Vec::new();
    push_pow(&mut parts, "hbar", p.hbar);
    push_pow(&mut parts, "s", p.s);
    push_pow(&mut parts, "r", p.r);
    parts.extend_from_slice(extra);
    if parts.is_empty() {
        (neg, coeff_str)
    } else if coeff_str == "1" {
        (neg, parts.join("*"))
    } else {
        (neg, format!("{}*{}", coeff_str, parts.join("*")))
    }
}

pub(crate) fn fmt_sum(terms: Vec<(bool, String)>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (neg, body)) in terms.iter().enumerate() {
        if idx == 0 {
            if *neg {
                write!(f, "-")?;
            }
        } else if *neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{}", body)?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| fmt_term(c, p, &[]))
            .collect();
        fmt_sum(rendered, f)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}
