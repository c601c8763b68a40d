//! s-parametrized star product, Moyal brackets, Poisson brackets, the
//! low-order bracket expansion, and exact polynomial time evolution.
//!
//! The star product used here is the bidifferential exponential
//!
//!   f (star_s) g = sum_{j,k} (i hbar / 2)^(j+k) (1-s)^j (-(1+s))^k / (j! k!)
//!                  (d_2^j d_1^k f) (d_1^j d_2^k g)
//!
//! which truncates exactly on polynomials. Its antisymmetrization is the
//! s-Moyal bracket; dropping hbar recovers a Poisson bracket whose sign
//! convention is forced by consistency with the expansion (the "paper"
//! convention below: {f, g} = d_2 f d_1 g - d_1 f d_2 g on (q, p)).

use num_bigint::BigInt;

use crate::combin::factorial;
use crate::error::{Error, Result};
use crate::phasepoly::{Axis, PhasePoly};
use crate::scalar::{Rat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PoissonConvention {
    /// d_p f d_q g - d_q f d_p g; the sign the star-product expansion forces.
    Paper,
    /// d_q f d_p g - d_p f d_q g, the textbook sign.
    Standard,
}

pub fn poisson(f: &PhasePoly, g: &PhasePoly, convention: PoissonConvention) -> Result<PhasePoly> {
    if f.vars() != g.vars() {
        return Err(Error::VarMismatch {
            left: f.vars().name(),
            right: g.vars().name(),
        });
    }
    let paper =
        &f.deriv(Axis::V2).mul(&g.deriv(Axis::V1))? - &f.deriv(Axis::V1).mul(&g.deriv(Axis::V2))?;
    Ok(match convention {
        PoissonConvention::Paper => paper,
        PoissonConvention::Standard => -&paper,
    })
}

/// Derivative ladder d_first^j (d_second^k f) while nonzero.
fn derivative_table(f: &PhasePoly, first: Axis, second: Axis) -> Vec<Vec<PhasePoly>> {
    let mut rows = Vec::new();
    let mut row_seed = f.clone();
    loop {
        let mut row = vec![row_seed.clone()];
        loop {
            let next = row.last().unwrap().deriv(second);
            if next.is_zero() {
                break;
            }
            row.push(next);
        }
        rows.push(row);
        row_seed = row_seed.deriv(first);
        if row_seed.is_zero() {
            break;
        }
    }
    rows
}

/// The s-parametrized star product. Exact and finite on polynomials.
pub fn star(f: &PhasePoly, g: &PhasePoly, s: &Scalar) -> Result<PhasePoly> {
    if f.vars() != g.vars() {
        return Err(Error::VarMismatch {
            left: f.vars().name(),
            right: g.vars().name(),
        });
    }
    // f-side: d_2^j d_1^k; g-side: d_1^j d_2^k.
    let f_tab = derivative_table(f, Axis::V2, Axis::V1);
    let g_tab = derivative_table(g, Axis::V1, Axis::V2);

    let half_i_hbar = &Scalar::i_hbar() * &Scalar::from_rat(Rat::new(1.into(), 2.into()));
    let one_minus = &Scalar::one() - s;
    let minus_one_plus = -&(&Scalar::one() + s);

    let mut acc = PhasePoly::zero(f.vars());
    for (j, f_row) in f_tab.iter().enumerate() {
        let Some(g_row) = g_tab.get(j) else {
            break;
        };
        for k in 0..f_row.len().min(g_row.len()) {
            let f_part = &f_row[k];
            let g_part = &g_row[k];
            let denom = Rat::new(
                BigInt::from(1),
                BigInt::from(factorial(j as u32)) * BigInt::from(factorial(k as u32)),
            );
            let coeff = &(&(&half_i_hbar.pow((j + k) as u32) * &one_minus.pow(j as u32))
                * &minus_one_plus.pow(k as u32))
                * &Scalar::from_rat(denom);
            acc = &acc + &f_part.mul(g_part)?.scale(&coeff);
        }
    }
    Ok(acc)
}

/// The s-Moyal bracket: star-commutator of the pair.
pub fn moyal(f: &PhasePoly, g: &PhasePoly, s: &Scalar) -> Result<PhasePoly> {
    Ok(&star(f, g, s)? - &star(g, f, s)?)
}

const SERIES_MAX_ORDER: u32 = 3;

/// Explicit low-order expansion of the s-Moyal bracket, truncated at
/// `max_order` (at most 3):
///
///   i hbar {f,g}_PB
///   + (1/2!)(i hbar/2)^2 * 4 s * [(d1^2 f)(d2^2 g) - (f <-> g)]
///   + (1/3!)(i hbar/2)^3 * ([(1-s)^3 + (1+s)^3] (d2^3 f)(d1^3 g)
///     - 6 (1-s^2) (d1 d2^2 f)(d2 d1^2 g) - (f <-> g))
pub fn moyal_series(f: &PhasePoly, g: &PhasePoly, s: &Scalar, max_order: u32) -> Result<PhasePoly> {
    if max_order > SERIES_MAX_ORDER {
        return Err(Error::Domain(format!(
            "moyal_series supports orders up to {SERIES_MAX_ORDER}, got {max_order}"
        )));
    }
    if f.vars() != g.vars() {
        return Err(Error::VarMismatch {
            left: f.vars().name(),
            right: g.vars().name(),
        });
    }
    let mut acc = PhasePoly::zero(f.vars());
    let i_hbar = Scalar::i_hbar();
    let half_i_hbar = &i_hbar * &Scalar::from_rat(Rat::new(1.into(), 2.into()));

    if max_order >= 1 {
        acc = &acc + &poisson(f, g, PoissonConvention::Paper)?.scale(&i_hbar);
    }
    if max_order >= 2 {
        let d1d1 = |h: &PhasePoly| h.deriv(Axis::V1).deriv(Axis::V1);
        let d2d2 = |h: &PhasePoly| h.deriv(Axis::V2).deriv(Axis::V2);
        let sym = &d1d1(f).mul(&d2d2(g))? - &d1d1(g).mul(&d2d2(f))?;
        let coeff = &(&half_i_hbar.pow(2) * &Scalar::from_int(2)) * s;
        acc = &acc + &sym.scale(&coeff);
    }
    if max_order >= 3 {
        let d2cubed = |h: &PhasePoly| h.deriv(Axis::V2).deriv(Axis::V2).deriv(Axis::V2);
        let d1cubed = |h: &PhasePoly| h.deriv(Axis::V1).deriv(Axis::V1).deriv(Axis::V1);
        let mixed_f = |h: &PhasePoly| h.deriv(Axis::V1).deriv(Axis::V2).deriv(Axis::V2);
        let mixed_g = |h: &PhasePoly| h.deriv(Axis::V2).deriv(Axis::V1).deriv(Axis::V1);

        let cubes = &(&Scalar::one() - s).pow(3) + &(&Scalar::one() + s).pow(3);
        let first = &d2cubed(f).mul(&d1cubed(g))?.scale(&cubes)
            - &d2cubed(g).mul(&d1cubed(f))?.scale(&cubes);
        let six_1ms2 = &Scalar::from_int(6) * &(&Scalar::one() - &(s * s));
        let second = &mixed_f(f).mul(&mixed_g(g))?.scale(&six_1ms2)
            - &mixed_f(g).mul(&mixed_g(f))?.scale(&six_1ms2);
        let coeff = &half_i_hbar.pow(3) * &Scalar::from_rat(Rat::new(1.into(), 6.into()));
        acc = &acc + &(&first - &second).scale(&coeff);
    }
    Ok(acc)
}

/// Taylor coefficients in time of the flow generated by a polynomial
/// Hamiltonian: coefficient k is Ad^k(f)/k! with
/// Ad(g) = (i hbar)^-1 {H, g}_MB at ordering s. Exact at every order; errors
/// if the bracket of some iterate is not divisible by i hbar (it always is
/// while hbar stays formal).
pub fn evolve(h: &PhasePoly, f: &PhasePoly, s: &Scalar, order: u32) -> Result<Vec<PhasePoly>> {
    let mut coeffs = vec![f.clone()];
    for k in 1..=order {
        let prev = coeffs.last().unwrap();
        let bracket = moyal(h, prev, s)?.div_exact_i_hbar()?;
        coeffs.push(bracket.scale(&Scalar::from_rat(Rat::new(1.into(), BigInt::from(k)))));
    }
    Ok(coeffs)
}
