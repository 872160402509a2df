//! Two-dimensional point sets used to count `Omega` in the linear regime,
//! with their closed-form totals.
//!
//! Points are pairs `(i, j)` with `0 <= i < e` and `qi + ej` (shifted) in a
//! window, so for each `i` the admissible `j` form a short interval.

use crate::arith::{add, ceil_div, mul, sub};
use crate::error::{Error, Result};
use crate::tower::TowerParams;

/// All `(i, j)` with `0 <= i < e` and `lo <= qi + ej < hi`.
fn window_points(params: &TowerParams, lo: i64, hi: i64) -> Result<Vec<(i64, i64)>> {
    let (q, e) = (params.q(), params.e());
    let mut out = Vec::new();
    for i in 0..e {
        let qi = q * i;
        let mut j = ceil_div(sub(lo, qi)?, e)?;
        while add(qi, mul(e, j)?)? < hi {
            out.push((i, j));
            j += 1;
        }
    }
    Ok(out)
}

fn non_negative(name: &'static str, value: i64) -> Result<()> {
    if value < 0 {
        return Err(Error::NegativeCoefficient { name, value });
    }
    Ok(())
}

fn check_b(params: &TowerParams, b: i64) -> Result<()> {
    if !(0..params.q()).contains(&b) {
        return Err(Error::IndexOutOfRange {
            what: "b",
            index: b,
            lo: 0,
            hi: params.q() - 1,
        });
    }
    Ok(())
}

/// `Psi_a(u)`: `0 <= qi + ej < e` and `q^2 i + (q^3 - q) j <= u - u* a`.
pub fn psi_enumerate(params: &TowerParams, a: i64, u: i64) -> Result<Vec<(i64, i64)>> {
    non_negative("a", a)?;
    non_negative("u", u)?;
    let q = params.q();
    let cap = sub(u, mul(params.u_star(), a)?)?;
    let mut pts = window_points(params, 0, params.e())?;
    pts.retain(|&(i, j)| q * q * i + (q * q * q - q) * j <= cap);
    Ok(pts)
}

/// `sum_a #Psi_a(u)` by enumeration. The sets are empty once `u* a > u`.
pub fn psi_sum_enumerated(params: &TowerParams, u: i64) -> Result<i64> {
    non_negative("u", u)?;
    let mut total = 0i64;
    for a in 0..=u / params.u_star() {
        total = add(total, psi_enumerate(params, a, u)?.len() as i64)?;
    }
    Ok(total)
}

/// `(2 + q - q^2)/2 + floor(u/q)`, valid for `u >= u*`.
pub fn psi_sum(params: &TowerParams, u: i64) -> Result<i64> {
    if u < params.u_star() {
        return Err(Error::Precondition(format!(
            "closed sum needs u >= {}, got {u}",
            params.u_star()
        )));
    }
    let q = params.q();
    Ok((2 + q - q * q) / 2 + u / q)
}

/// `Phi_b^(1)(t)`: `-t - (q+1)b <= qi + ej < 0`.
pub fn phi1_enumerate(params: &TowerParams, b: i64, t: i64) -> Result<Vec<(i64, i64)>> {
    check_b(params, b)?;
    non_negative("t", t)?;
    let lo = -add(t, mul(params.q() + 1, b)?)?;
    window_points(params, lo, 0)
}

pub fn phi1_sum_enumerated(params: &TowerParams, t: i64) -> Result<i64> {
    let mut total = 0i64;
    for b in 0..params.q() {
        total = add(total, phi1_enumerate(params, b, t)?.len() as i64)?;
    }
    Ok(total)
}

/// `q^2 (q-1)/2 + qt`.
pub fn phi1_sum(params: &TowerParams, t: i64) -> Result<i64> {
    non_negative("t", t)?;
    let q = params.q();
    add(q * q * (q - 1) / 2, mul(q, t)?)
}

/// `Gamma_b^(1)(t_1)`: `-t_1 <= qi + ej + (q+1)b < 0`.
pub fn gamma1_enumerate(params: &TowerParams, b: i64, t1: i64) -> Result<Vec<(i64, i64)>> {
    check_b(params, b)?;
    non_negative("t1", t1)?;
    let shift = (params.q() + 1) * b;
    window_points(params, -t1 - shift, -shift)
}

pub fn gamma1_sum_enumerated(params: &TowerParams, t1: i64) -> Result<i64> {
    let mut total = 0i64;
    for b in 0..params.q() {
        total = add(total, gamma1_enumerate(params, b, t1)?.len() as i64)?;
    }
    Ok(total)
}

/// `q t_1`.
pub fn gamma1_sum(params: &TowerParams, t1: i64) -> Result<i64> {
    non_negative("t1", t1)?;
    mul(params.q(), t1)
}
