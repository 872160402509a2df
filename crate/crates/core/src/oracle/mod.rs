//! Brute-force checks for the lattice sets and the semigroup predicates.
//!
//! Nothing here calls a closed-form count or a semigroup closed form: the
//! scans test the raw window inequalities over an explicit box, and the
//! semigroup oracles compare dimensions of Riemann-Roch spaces.

mod suites;

pub use suites::{verify_suite, BoxSize, Suite, VerificationReport, MAX_VERIFY_Q};

use serde::Serialize;

use crate::arith::{add, ceil_div, floor_div, mul, neg, sub, sum};
use crate::error::{Error, Result};
use crate::lattice::{AggParams, MultiLatticePoint, MultiParams, PrimePoint3};
use crate::riemann_roch::dim;
use crate::semigroup::PlaceSelection;
use crate::tower::{Divisor, PlaceId, TowerParams};

/// Inclusive exponent ranges scanned by the raw oracles. `j` and `k` apply
/// to every component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanBox {
    pub i: (i64, i64),
    pub j: (i64, i64),
    pub k: (i64, i64),
}

impl ScanBox {
    pub fn cube(b: i64) -> Self {
        Self {
            i: (-b, b),
            j: (-b, b),
            k: (-b, b),
        }
    }

    fn on_edge(range: (i64, i64), v: i64) -> bool {
        v == range.0 || v == range.1
    }
}

/// A box containing every point of the multi-index set, one unit larger than
/// the extreme values of the ceiling formulas in every direction.
pub fn required_box(params: &TowerParams, g: &MultiParams) -> Result<ScanBox> {
    g.check(params)?;
    let (q, e) = (params.q(), params.e());
    let m = params.block_len() as i64;
    let ilo = sub(neg(g.r)?, 1)?;
    let ihi = add(add(add(g.u, sum(g.s.iter().copied())?)?, sum(g.t.iter().copied())?)?, 1)?;
    let (smin, smax) = min_max(&g.s);
    let (tmin, tmax) = min_max(&g.t);
    let kmin = ceil_div(sub(neg(ihi)?, smax)?, e)?;
    let kmax = ceil_div(sub(neg(ilo)?, smin)?, e)?;
    let jmin = ceil_div(add(mul(q, sub(mul(-q, ihi)?, tmax)?)?, mul(e, mul(m, kmin)?)?)?, q * e)?;
    let jmax = ceil_div(add(mul(q, sub(mul(-q, ilo)?, tmin)?)?, mul(e, mul(m, kmax)?)?)?, q * e)?;
    Ok(ScanBox {
        i: (ilo, ihi),
        j: (jmin - 1, jmax + 1),
        k: (kmin - 1, kmax + 1),
    })
}

fn min_max(v: &[i64]) -> (i64, i64) {
    (
        v.iter().copied().min().unwrap_or(0),
        v.iter().copied().max().unwrap_or(0),
    )
}

/// Every point of the box satisfying the raw inequalities of the
/// multi-index set.
///
/// Each `k_mu` window involves only `i`, and each `j_nu` window only `i` and
/// `sum k`, so candidates are collected per coordinate before the products
/// are formed. Errors with [`Error::BoxTooSmall`] if a point lies on the
/// boundary of the box.
pub fn omega_raw_scan(params: &TowerParams, g: &MultiParams, bx: &ScanBox) -> Result<Vec<MultiLatticePoint>> {
    g.check(params)?;
    let (q, e) = (params.q(), params.e());
    let m = params.block_len();
    let mut out = Vec::new();
    for i in bx.i.0..=bx.i.1 {
        if i < -g.r {
            continue;
        }
        let mut k_choices = Vec::with_capacity(m);
        for &sm in &g.s {
            let c: Vec<i64> = (bx.k.0..=bx.k.1)
                .filter(|&k| {
                    let w = i + e * k;
                    -sm <= w && w < -sm + e
                })
                .collect();
            k_choices.push(c);
        }
        for k in cartesian(&k_choices) {
            let ksum: i64 = k.iter().sum();
            let mut j_choices = Vec::with_capacity(m);
            for &tn in &g.t {
                let c: Vec<i64> = (bx.j.0..=bx.j.1)
                    .filter(|&j| {
                        let w = q * i + e * j - (q + 1) * ksum;
                        -tn <= w && w < -tn + e
                    })
                    .collect();
                j_choices.push(c);
            }
            for j in cartesian(&j_choices) {
                let jsum: i64 = j.iter().sum();
                if -q * q * i - e * jsum - (q + 1) * ksum < -g.u {
                    continue;
                }
                if ScanBox::on_edge(bx.i, i)
                    || j.iter().any(|&v| ScanBox::on_edge(bx.j, v))
                    || k.iter().any(|&v| ScanBox::on_edge(bx.k, v))
                {
                    return Err(Error::BoxTooSmall("multi-index scan"));
                }
                out.push(MultiLatticePoint { i, j, k: k.clone() });
            }
        }
    }
    Ok(out)
}

fn cartesian(choices: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(acc.len() * c.len());
        for prefix in &acc {
            for &v in c {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// A box for [`omega_prime_raw_scan`], obtained by pushing the aggregate
/// ceiling extremes through `(i, j, k) -> (i+qj+qk, -j+(q-1)k, -k)`.
pub fn required_prime_box(params: &TowerParams, g: &AggParams) -> Result<ScanBox> {
    let (q, e) = (params.q(), params.e());
    let ilo = sub(neg(g.r)?, 1)?;
    let ihi = add(add(g.u, mul(q - 1, add(g.s, g.t)?)?)?, 1)?;
    let kmin = ceil_div(sub(neg(ihi)?, g.s)?, e)? - 1;
    let kmax = ceil_div(sub(neg(ilo)?, g.s)?, e)? + 1;
    let jmin = ceil_div(sub(sub(neg(g.t)?, mul(q, ihi)?)?, mul(q + 1, kmax)?)?, e)? - 1;
    let jmax = ceil_div(sub(sub(neg(g.t)?, mul(q, ilo)?)?, mul(q + 1, kmin)?)?, e)? + 1;
    Ok(ScanBox {
        i: (
            add(add(ilo, mul(q, jmin)?)?, mul(q, kmin)?)? - 1,
            add(add(ihi, mul(q, jmax)?)?, mul(q, kmax)?)? + 1,
        ),
        j: (
            add(neg(jmax)?, mul(q - 1, kmin)?)? - 1,
            add(neg(jmin)?, mul(q - 1, kmax)?)? + 1,
        ),
        k: (-kmax - 1, -kmin + 1),
    })
}

/// Every `(I, J, K)` in the box with
/// `-r <= I + qJ + q^2 K`, `-s <= I + qJ - qK < -s + e`,
/// `-t <= qI - qJ - K < -t + e` and `-u <= -q^2 I - qJ - K`.
///
/// For fixed `I` the first window pins `J - K` to about `q + 1` values and
/// the second then pins `K` to about `q`; both candidate ranges are padded
/// by one and every candidate is tested against all four inequalities.
pub fn omega_prime_raw_scan(params: &TowerParams, g: &AggParams, bx: &ScanBox) -> Result<Vec<PrimePoint3>> {
    let (q, e) = (params.q(), params.e());
    let mut out = Vec::new();
    for i in bx.i.0..=bx.i.1 {
        let dlo = ceil_div(-g.s - i, q)? - 1;
        let dhi = floor_div(-g.s - i + e - 1, q)? + 1;
        for d in dlo..=dhi {
            let base = q * i - q * d + g.t;
            let klo = (ceil_div(base - e + 1, q + 1)? - 1).max(bx.k.0);
            let khi = (floor_div(base, q + 1)? + 1).min(bx.k.1);
            for k in klo..=khi {
                let j = d + k;
                if j < bx.j.0 || j > bx.j.1 {
                    continue;
                }
                let w0 = i + q * j - q * k;
                let w1 = q * i - q * j - k;
                let ok = -g.r <= i + q * j + q * q * k
                    && -g.s <= w0
                    && w0 < -g.s + e
                    && -g.t <= w1
                    && w1 < -g.t + e
                    && -g.u <= -q * q * i - q * j - k;
                if !ok {
                    continue;
                }
                if ScanBox::on_edge(bx.i, i) || ScanBox::on_edge(bx.j, j) || ScanBox::on_edge(bx.k, k) {
                    return Err(Error::BoxTooSmall("x1 x2 x3 scan"));
                }
                out.push(PrimePoint3 { i, j, k });
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn divisor_on(params: &TowerParams, places: &[PlaceId], coeffs: &[i64]) -> Result<Divisor> {
    if places.len() != coeffs.len() {
        return Err(Error::LengthMismatch {
            expected: places.len(),
            got: coeffs.len(),
        });
    }
    let mut d = Divisor::zero(params);
    for (n, (&p, &c)) in places.iter().zip(coeffs).enumerate() {
        let p = p.validate(params)?;
        if places[..n].contains(&p) {
            return Err(Error::InvalidPlace(format!("{p} listed twice")));
        }
        d.set_coeff(p, c)?;
    }
    Ok(d)
}

/// `n in H(P_1..P_k)` iff `l(G) != l(G - P_j)` for every `j`, with
/// `G = sum n_j P_j`.
///
/// Zero coordinates are dropped first, which keeps every divisor effective:
/// a pole divisor supported off `P_j` says nothing about `P_j`.
pub fn membership_oracle(params: &TowerParams, places: &[PlaceId], coeffs: &[i64]) -> Result<bool> {
    if let Some(&value) = coeffs.iter().find(|&&c| c < 0) {
        return Err(Error::NegativeCoefficient { name: "tuple", value });
    }
    let g = divisor_on(params, places, coeffs)?;
    let base = dim(params, &g)?;
    for (&p, &c) in places.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        let mut lower = g.clone();
        lower.set_coeff(p, c - 1)?;
        if dim(params, &lower)? == base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pure gap iff `l(sum n_j P_j) = l(sum (n_j - 1) P_j)`, all `n_j >= 1`.
pub fn pure_gap_oracle(params: &TowerParams, places: &[PlaceId], coeffs: &[i64]) -> Result<bool> {
    if let Some(&value) = coeffs.iter().find(|&&c| c < 1) {
        return Err(Error::Precondition(format!("pure gaps have all entries >= 1, got {value}")));
    }
    let g = divisor_on(params, places, coeffs)?;
    let lowered: Vec<i64> = coeffs.iter().map(|c| c - 1).collect();
    let h = divisor_on(params, places, &lowered)?;
    Ok(dim(params, &g)? == dim(params, &h)?)
}

pub fn membership_oracle_sel(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<bool> {
    let coeffs: Vec<i64> = s.iter().chain(t).copied().collect();
    membership_oracle(params, &sel.places(params)?, &coeffs)
}

pub fn pure_gap_oracle_sel(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<bool> {
    let coeffs: Vec<i64> = s.iter().chain(t).copied().collect();
    pure_gap_oracle(params, &sel.places(params)?, &coeffs)
}
