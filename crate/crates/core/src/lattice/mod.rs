//! Lattice-point sets whose cardinalities are Riemann-Roch dimensions.
//!
//! For `G = rQ + sS0 + tS1 + uP` the set `Omega_{r,s,t,u}` collects the
//! exponents `(i, j, k)` of the monomials `x_1^i w^j v^k` that form a basis of
//! `L(G)`. The `S0` and `S1` conditions are half-open windows of width
//! `e = q^2 + q`, so `i` alone determines `(j, k)`; the only real filters are
//! `i >= -r` and the pole order at `P`.

pub mod sums;
pub mod multi;

use serde::{Deserialize, Serialize};

pub use crate::arith::{ceil_div, floor_div};
use crate::arith::{add, mul, neg, sub};
use crate::error::{Error, Result};
use crate::tower::TowerParams;

pub use multi::{
    closed_count_multi, effective_r_multi, normalize_multi, omega_multi_count, omega_multi_count_profile,
    omega_multi_enumerate, reduce_multi, MultiLatticePoint, MultiParams, MultiReduction,
};

/// Coefficients of `rQ + sS0 + tS1 + uP`. Any signs are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AggParams {
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub u: i64,
}

impl AggParams {
    pub fn new(r: i64, s: i64, t: i64, u: i64) -> Self {
        Self { r, s, t, u }
    }

    /// `r + (q-1)s + (q-1)t + u`.
    pub fn degree(&self, params: &TowerParams) -> Result<i64> {
        let m = params.q() - 1;
        add(add(self.r, mul(m, add(self.s, self.t)?)?)?, self.u)
    }

    /// The same divisor with every `S0`/`S1` coefficient spelled out.
    pub fn to_multi(&self, params: &TowerParams) -> MultiParams {
        let m = params.block_len();
        MultiParams {
            r: self.r,
            s: vec![self.s; m],
            t: vec![self.t; m],
            u: self.u,
        }
    }
}

/// Exponents of `x_1^i w^j v^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint3 {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

/// Exponents of `x_1^i x_2^j x_3^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePoint3 {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

/// Rewrites `x_1^i w^j v^k` as `x_1^{i+qj+qk} x_2^{-j+(q-1)k} x_3^{-k}`.
pub fn to_prime(params: &TowerParams, p: LatticePoint3) -> Result<PrimePoint3> {
    let q = params.q();
    Ok(PrimePoint3 {
        i: add(add(p.i, mul(q, p.j)?)?, mul(q, p.k)?)?,
        j: add(neg(p.j)?, mul(q - 1, p.k)?)?,
        k: neg(p.k)?,
    })
}

/// The `(j, k)` completing `i` to a point of the `S0`/`S1` windows.
pub fn omega_point_for_i(params: &TowerParams, i: i64, s: i64, t: i64) -> Result<(i64, i64)> {
    let q = params.q();
    let e = params.e();
    let k = ceil_div(sub(neg(s)?, i)?, e)?;
    let num = sub(sub(neg(t)?, mul(q, i)?)?, mul(q + 1, k)?)?;
    let j = ceil_div(num, e)?;
    Ok((j, k))
}

/// Coefficient at `P` of `Div(x_1^i w^j v^k)`.
pub(crate) fn p_coeff_xwv(params: &TowerParams, i: i64, j: i64, k: i64) -> Result<i64> {
    let q = params.q();
    let q3 = q * q * q;
    neg(add(add(mul(q * q, i)?, mul(q3 - q, j)?)?, mul(q3 + q * q - q - 1, k)?)?)
}

/// Inclusive range of admissible `i`.
///
/// Every point gives `f` with `Div(f) + G >= 0` away from `Q`, and `Div(f)`
/// has degree zero, so `i = v_Q(f) <= u + (q-1)(s+t)`.
fn i_range(params: &TowerParams, g: &AggParams) -> Result<(i64, i64)> {
    let m = params.q() - 1;
    let hi = add(g.u, mul(m, add(g.s, g.t)?)?)?;
    Ok((neg(g.r)?, hi))
}

fn point_at(params: &TowerParams, g: &AggParams, i: i64) -> Result<Option<LatticePoint3>> {
    let (j, k) = omega_point_for_i(params, i, g.s, g.t)?;
    if p_coeff_xwv(params, i, j, k)? >= neg(g.u)? {
        Ok(Some(LatticePoint3 { i, j, k }))
    } else {
        Ok(None)
    }
}

fn for_each_point(
    params: &TowerParams,
    g: &AggParams,
    mut f: impl FnMut(LatticePoint3),
) -> Result<()> {
    let (lo, hi) = i_range(params, g)?;
    let mut i = lo;
    while i <= hi {
        if let Some(p) = point_at(params, g, i)? {
            f(p);
        }
        i += 1;
    }
    debug_assert!(
        hi < lo || point_at(params, g, hi.saturating_add(1)).map_or(true, |p| p.is_none()),
        "scan bound missed a point for {g:?}"
    );
    Ok(())
}

/// `Omega_{r,s,t,u}` in ascending `i`.
pub fn omega_enumerate(params: &TowerParams, g: &AggParams) -> Result<Vec<LatticePoint3>> {
    let mut out = Vec::new();
    for_each_point(params, g, |p| out.push(p))?;
    Ok(out)
}

/// `#Omega_{r,s,t,u}`.
pub fn omega_count(params: &TowerParams, g: &AggParams) -> Result<i64> {
    let mut n = 0i64;
    for_each_point(params, g, |_| n += 1)?;
    Ok(n)
}

/// `#Omega_{r,s,t,u}` for every `r` in `r_lo..=r_hi`, from a single scan.
///
/// The admissible `i >= -r` do not depend on `r` otherwise, so the count for
/// `r` is the number of admissible `i` at or above `-r`.
pub fn omega_count_profile(
    params: &TowerParams,
    s: i64,
    t: i64,
    u: i64,
    r_lo: i64,
    r_hi: i64,
) -> Result<Vec<i64>> {
    let g = AggParams::new(r_hi, s, t, u);
    let mut hits = Vec::new();
    for_each_point(params, &g, |p| hits.push(p.i))?;
    Ok(profile_from_hits(&hits, r_lo, r_hi))
}

pub(crate) fn profile_from_hits(hits: &[i64], r_lo: i64, r_hi: i64) -> Vec<i64> {
    (r_lo..=r_hi)
        .map(|r| (hits.len() - hits.partition_point(|&i| i < -r)) as i64)
        .collect()
}

/// `Omega'_{r,s,t,u}`: the basis in the variables `x_1, x_2, x_3`, ordered
/// as the images of ascending `i`.
pub fn omega_prime_enumerate(params: &TowerParams, g: &AggParams) -> Result<Vec<PrimePoint3>> {
    omega_enumerate(params, g)?
        .into_iter()
        .map(|p| to_prime(params, p))
        .collect()
}

/// Result of moving `rQ + sS0 + tS1 + uP` to an equivalent `r'Q + t'S1 + u'P`
/// with `0 <= t' < q+1` and `u* <= u' < 2u*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    pub alpha: i64,
    pub beta: i64,
    pub r_hat: i64,
    pub t_hat: i64,
    pub u_hat: i64,
}

impl ReductionResult {
    pub fn params(&self) -> AggParams {
        AggParams::new(self.r_hat, 0, self.t_hat, self.u_hat)
    }

    /// Exponents `(i, j, k)` of `f = x_1^{-s} (x_1^e w^{-q} v^{-1})^alpha
    /// (x_1^{u*} w^{1-q^2} v^{-q})^beta`, whose divisor maps the input to the
    /// reduced divisor.
    pub fn witness(&self, params: &TowerParams, s: i64) -> Result<LatticePoint3> {
        let q = params.q();
        let (a, b) = (self.alpha, self.beta);
        Ok(LatticePoint3 {
            i: add(add(neg(s)?, mul(params.e(), a)?)?, mul(params.u_star(), b)?)?,
            j: add(mul(-q, a)?, mul(1 - q * q, b)?)?,
            k: sub(neg(a)?, mul(q, b)?)?,
        })
    }
}

/// Reduces `(r, s, t, u)` to `(r', 0, t', u')` with the same count.
pub fn reduce_aggregate(params: &TowerParams, g: &AggParams) -> Result<ReductionResult> {
    let q = params.q();
    let e = params.e();
    let us = params.u_star();
    let d = sub(g.t, mul(q, g.s)?)?;
    let alpha = floor_div(d, q + 1)?;
    let t_hat = sub(d, mul(q + 1, alpha)?)?;
    let x = sub(add(g.u, mul(q * q, g.s)?)?, mul(q + 1, alpha)?)?;
    let beta = sub(floor_div(x, us)?, 1)?;
    let u_hat = sub(x, mul(us, beta)?)?;
    let r_hat = add(add(sub(g.r, g.s)?, mul(e, alpha)?)?, mul(us, beta)?)?;
    let red = ReductionResult {
        alpha,
        beta,
        r_hat,
        t_hat,
        u_hat,
    };
    if g.degree(params)? != red.params().degree(params)? {
        return Err(Error::Precondition(format!("reduction changed the degree of {g:?}")));
    }
    Ok(red)
}

/// Smallest `r` for which the reduced divisor has `r' >= r*`, clamped at 0.
///
/// Sufficient for `omega_count == closed_count`, not necessary.
pub fn effective_r(params: &TowerParams, s: i64, t: i64, u: i64) -> Result<i64> {
    let red = reduce_aggregate(params, &AggParams::new(0, s, t, u))?;
    // r' is r plus a constant, so r' >= r* iff r >= r* - (r' at r = 0)
    Ok(sub(params.r_star(), red.r_hat)?.max(0))
}

/// `1 - g + r + (q-1)s + (q-1)t + u`, refused below [`effective_r`].
pub fn closed_count(params: &TowerParams, g: &AggParams) -> Result<i64> {
    let bound = effective_r(params, g.s, g.t, g.u)?;
    if g.r < bound {
        return Err(Error::Precondition(format!(
            "closed form needs r >= {bound}, got r = {}",
            g.r
        )));
    }
    add(1 - params.genus3(), g.degree(params)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{monomial_divisor_x123, monomial_divisor_xwv, Divisor};
    use proptest::prelude::*;

    fn tp(q: i64) -> TowerParams {
        TowerParams::new(q).unwrap()
    }

    fn g(r: i64, s: i64, t: i64, u: i64) -> AggParams {
        AggParams::new(r, s, t, u)
    }

    /// Raw window scan over a box, sharing nothing with the ceiling path.
    fn raw(params: &TowerParams, a: &AggParams, b: i64) -> Vec<LatticePoint3> {
        let (q, e) = (params.q(), params.e());
        let q3 = q * q * q;
        let mut out = vec![];
        for i in -b..=4 * b {
            for j in -b..=b {
                for k in -b..=b {
                    let w0 = i + e * k;
                    let w1 = q * i + e * j + (q + 1) * k;
                    let pv = -q * q * i - (q3 - q) * j - (q3 + q * q - q - 1) * k;
                    if -a.r <= i
                        && -a.s <= w0
                        && w0 < -a.s + e
                        && -a.t <= w1
                        && w1 < -a.t + e
                        && -a.u <= pv
                    {
                        out.push(LatticePoint3 { i, j, k });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn point_for_i_examples() {
        let p = tp(2);
        assert_eq!(omega_point_for_i(&p, 0, 0, 0).unwrap(), (0, 0));
        assert_eq!(omega_point_for_i(&p, 6, 0, 0).unwrap(), (-1, -1));
        assert_eq!(omega_point_for_i(&p, 15, 0, 0).unwrap(), (-4, -2));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            omega_enumerate(&tp(3), &g(0, 0, 0, 0)).unwrap(),
            vec![LatticePoint3 { i: 0, j: 0, k: 0 }]
        );
        let pts = omega_enumerate(&tp(2), &g(0, 0, 0, 20)).unwrap();
        assert_eq!(pts.iter().map(|p| p.i).collect::<Vec<_>>(), (0..=15).collect::<Vec<_>>());
        assert_eq!(omega_count(&tp(2), &g(6, 0, 0, 12)).unwrap(), 14);
        assert_eq!(omega_count(&tp(5), &g(0, 0, 0, 0)).unwrap(), 1);
        assert_eq!(omega_count(&tp(2), &g(12, 0, 0, 6)).unwrap(), 14);
    }

    #[test]
    fn enumerate_matches_raw_scan() {
        for (q, b) in [(2, 12), (3, 8)] {
            let p = tp(q);
            for a in [g(0, 0, 0, 20), g(6, 0, 0, 12), g(3, 2, 5, 7), g(1, 4, 0, 9), g(-1, 0, 0, 9), g(5, -2, 3, 4)] {
                assert_eq!(omega_enumerate(&p, &a).unwrap(), raw(&p, &a, b), "q={q} {a:?}");
            }
        }
    }

    #[test]
    fn prime_examples() {
        let p = tp(2);
        assert_eq!(
            omega_prime_enumerate(&p, &g(0, 0, 0, 0)).unwrap(),
            vec![PrimePoint3 { i: 0, j: 0, k: 0 }]
        );
        assert_eq!(omega_prime_enumerate(&p, &g(0, 0, 0, 20)).unwrap().len(), 16);
        assert_eq!(
            to_prime(&p, LatticePoint3 { i: 6, j: -1, k: -1 }).unwrap(),
            PrimePoint3 { i: 2, j: 0, k: 1 }
        );
    }

    #[test]
    fn prime_points_satisfy_raw_conditions() {
        for q in [2, 3] {
            let p = tp(q);
            let a = g(4, 3, 2, 30);
            for x in omega_prime_enumerate(&p, &a).unwrap() {
                let d = monomial_divisor_x123(&p, x.i, x.j, x.k).unwrap();
                let lo = d.add(&Divisor::aggregate(&p, a.r, a.s, a.t, a.u)).unwrap();
                assert!(lo.is_effective());
                assert!(d.s0[0] < -a.s + p.e() && d.s1[0] < -a.t + p.e());
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let p = tp(2);
        let r = reduce_aggregate(&p, &g(0, 0, 0, 20)).unwrap();
        assert_eq!((r.alpha, r.beta, r.r_hat, r.t_hat, r.u_hat), (0, 0, 0, 0, 20));
        let r = reduce_aggregate(&p, &g(6, 0, 0, 12)).unwrap();
        assert_eq!((r.alpha, r.beta, r.r_hat, r.t_hat, r.u_hat), (0, 0, 6, 0, 12));
        let r = reduce_aggregate(&p, &g(5, 2, 7, 30)).unwrap();
        assert_eq!((r.alpha, r.beta, r.r_hat, r.t_hat, r.u_hat), (1, 1, 21, 0, 23));
        assert_eq!(
            omega_count(&p, &g(5, 2, 7, 30)).unwrap(),
            omega_count(&p, &r.params()).unwrap()
        );
    }

    #[test]
    fn effective_r_examples() {
        let p = tp(2);
        assert_eq!(effective_r(&p, 0, 0, 12).unwrap(), 6);
        assert_eq!(effective_r(&p, 0, 0, 20).unwrap(), 6);
        assert_eq!(effective_r(&p, 2, 7, 30).unwrap(), 0);
    }

    #[test]
    fn closed_count_examples() {
        let p = tp(2);
        assert_eq!(closed_count(&p, &g(6, 0, 0, 12)).unwrap(), 14);
        assert_eq!(closed_count(&p, &g(6, 0, 1, 12)).unwrap(), 15);
        assert_eq!(omega_count(&p, &g(6, 0, 1, 12)).unwrap(), 15);
        let p3 = tp(3);
        let a = g(p3.r_star(), 0, 0, p3.u_star());
        assert_eq!(closed_count(&p3, &a).unwrap(), 39);
        assert_eq!(omega_count(&p3, &a).unwrap(), 39);
        assert!(matches!(closed_count(&p, &g(5, 0, 0, 12)), Err(Error::Precondition(_))));
    }

    #[test]
    fn witness_realizes_reduction() {
        let p = tp(2);
        let a = g(5, 2, 7, 30);
        let red = reduce_aggregate(&p, &a).unwrap();
        let w = red.witness(&p, a.s).unwrap();
        let d = Divisor::aggregate(&p, a.r, a.s, a.t, a.u)
            .add(&monomial_divisor_xwv(&p, w.i, w.j, w.k).unwrap())
            .unwrap();
        assert_eq!(d, Divisor::aggregate(&p, 21, 0, 0, 23));
    }

    #[test]
    fn profile_matches_counts() {
        let p = tp(3);
        let prof = omega_count_profile(&p, 5, 2, 30, -3, 40).unwrap();
        for (n, r) in (-3..=40).enumerate() {
            assert_eq!(prof[n], omega_count(&p, &g(r, 5, 2, 30)).unwrap());
        }
    }

    proptest! {
        #[test]
        fn reduction_invariants(q in prop::sample::select(vec![2i64, 3, 4]),
                                r in -30i64..80, s in -30i64..80, t in -30i64..80, u in -30i64..80) {
            let p = tp(q);
            let a = g(r, s, t, u);
            let red = reduce_aggregate(&p, &a).unwrap();
            prop_assert!((0..q + 1).contains(&red.t_hat));
            prop_assert!((p.u_star()..2 * p.u_star()).contains(&red.u_hat));
            prop_assert_eq!(a.degree(&p).unwrap(), red.params().degree(&p).unwrap());
            prop_assert_eq!(omega_count(&p, &a).unwrap(), omega_count(&p, &red.params()).unwrap());
        }

        #[test]
        fn symmetry(q in prop::sample::select(vec![2i64, 3]),
                    r in 0i64..72, s in 0i64..72, t in 0i64..72, u in 0i64..72) {
            let p = tp(q);
            prop_assert_eq!(omega_count(&p, &g(r, s, t, u)).unwrap(), omega_count(&p, &g(u, t, s, r)).unwrap());
        }

        #[test]
        fn i_strictly_increasing(q in prop::sample::select(vec![2i64, 3, 4]),
                                 r in 0i64..40, s in 0i64..40, t in 0i64..40, u in 0i64..40) {
            let pts = omega_enumerate(&tp(q), &g(r, s, t, u)).unwrap();
            prop_assert!(pts.windows(2).all(|w| w[0].i < w[1].i));
        }

        #[test]
        fn closed_form_above_threshold(q in prop::sample::select(vec![2i64, 3]),
                                       s in 0i64..72, t in 0i64..72, u in 0i64..72, extra in 0i64..20) {
            let p = tp(q);
            let r = effective_r(&p, s, t, u).unwrap() + extra;
            let a = g(r, s, t, u);
            prop_assert_eq!(omega_count(&p, &a).unwrap(), closed_count(&p, &a).unwrap());
        }
    }
}
