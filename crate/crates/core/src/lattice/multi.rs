//! The multi-index set for `G = rQ + sum s_mu S0(mu) + sum t_nu S1(nu) + uP`.
//!
//! Points are exponents of `x_1^i prod (z_2 - alpha_nu)^{j_nu}
//! prod (z_3 - alpha_mu)^{k_mu}`. As in the aggregate case, `i` determines
//! the rest of the point.

use serde::{Deserialize, Serialize};

use crate::arith::{add, ceil_div, floor_div, mul, neg, sub, sum};
use crate::error::{Error, Result};
use crate::tower::TowerParams;

/// Coefficients `(r, s_1..s_{q-1}, t_1..t_{q-1}, u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiParams {
    pub r: i64,
    pub s: Vec<i64>,
    pub t: Vec<i64>,
    pub u: i64,
}

impl MultiParams {
    pub fn new(params: &TowerParams, r: i64, s: Vec<i64>, t: Vec<i64>, u: i64) -> Result<Self> {
        let m = MultiParams { r, s, t, u };
        m.check(params)?;
        Ok(m)
    }

    pub fn zero(params: &TowerParams) -> Self {
        let m = params.block_len();
        MultiParams {
            r: 0,
            s: vec![0; m],
            t: vec![0; m],
            u: 0,
        }
    }

    pub fn check(&self, params: &TowerParams) -> Result<()> {
        let m = params.block_len();
        for v in [&self.s, &self.t] {
            if v.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
        }
        Ok(())
    }

    /// Plain coefficient sum: every place is rational.
    pub fn degree(&self) -> Result<i64> {
        add(add(add(self.r, sum(self.s.iter().copied())?)?, sum(self.t.iter().copied())?)?, self.u)
    }

    pub fn is_effective(&self) -> bool {
        self.r >= 0 && self.u >= 0 && self.s.iter().chain(&self.t).all(|&c| c >= 0)
    }
}

/// Exponents `(i, j_1..j_{q-1}, k_1..k_{q-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiLatticePoint {
    pub i: i64,
    pub j: Vec<i64>,
    pub k: Vec<i64>,
}

impl MultiLatticePoint {
    /// Flat tuple `(i, j.., k..)`.
    pub fn flat(&self) -> Vec<i64> {
        std::iter::once(self.i).chain(self.j.iter().copied()).chain(self.k.iter().copied()).collect()
    }
}

/// Fills `j`, `k` for a given `i` and returns the coefficient at `P`.
fn complete(params: &TowerParams, g: &MultiParams, i: i64, j: &mut [i64], k: &mut [i64]) -> Result<i64> {
    let q = params.q();
    let e = params.e();
    for (km, &sm) in k.iter_mut().zip(&g.s) {
        *km = ceil_div(sub(neg(i)?, sm)?, e)?;
    }
    let ksum = sum(k.iter().copied())?;
    // ceil((-qi - t)/e + K/q) over the common denominator q*e
    let ek = mul(e, ksum)?;
    let qi = mul(q, i)?;
    for (jn, &tn) in j.iter_mut().zip(&g.t) {
        let num = add(mul(q, sub(neg(qi)?, tn)?)?, ek)?;
        *jn = ceil_div(num, q * e)?;
    }
    let jsum = sum(j.iter().copied())?;
    neg(add(add(mul(q * q, i)?, mul(e, jsum)?)?, mul(q + 1, ksum)?)?)
}

/// Inclusive range of admissible `i`: `[-r, u + sum s + sum t]` by degree zero
/// of principal divisors.
fn i_range(g: &MultiParams) -> Result<(i64, i64)> {
    let hi = add(add(g.u, sum(g.s.iter().copied())?)?, sum(g.t.iter().copied())?)?;
    Ok((neg(g.r)?, hi))
}

fn for_each_point(
    params: &TowerParams,
    g: &MultiParams,
    mut f: impl FnMut(i64, &[i64], &[i64]),
) -> Result<()> {
    g.check(params)?;
    let m = params.block_len();
    let (mut j, mut k) = (vec![0; m], vec![0; m]);
    let (lo, hi) = i_range(g)?;
    let floor = neg(g.u)?;
    let mut i = lo;
    while i <= hi {
        if complete(params, g, i, &mut j, &mut k)? >= floor {
            f(i, &j, &k);
        }
        i += 1;
    }
    debug_assert!(
        hi < lo || hi == i64::MAX || complete(params, g, hi + 1, &mut j, &mut k).map_or(true, |p| p < floor),
        "scan bound missed a point for {g:?}"
    );
    Ok(())
}

/// The multi-index set in ascending `i`.
pub fn omega_multi_enumerate(params: &TowerParams, g: &MultiParams) -> Result<Vec<MultiLatticePoint>> {
    let mut out = Vec::new();
    for_each_point(params, g, |i, j, k| {
        out.push(MultiLatticePoint {
            i,
            j: j.to_vec(),
            k: k.to_vec(),
        })
    })?;
    Ok(out)
}

pub fn omega_multi_count(params: &TowerParams, g: &MultiParams) -> Result<i64> {
    let mut n = 0i64;
    for_each_point(params, g, |_, _, _| n += 1)?;
    Ok(n)
}

/// `omega_multi_count` for every `r` in `r_lo..=r_hi`; `g.r` is ignored.
pub fn omega_multi_count_profile(params: &TowerParams, g: &MultiParams, r_lo: i64, r_hi: i64) -> Result<Vec<i64>> {
    let mut g = g.clone();
    g.r = r_hi;
    let mut hits = Vec::new();
    for_each_point(params, &g, |i, _, _| hits.push(i))?;
    Ok(super::profile_from_hits(&hits, r_lo, r_hi))
}

/// Output of [`reduce_multi`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiReduction {
    pub params: MultiParams,
    /// `min s_mu`.
    pub s_min: i64,
    /// First index (1-based) attaining the minimum.
    pub mu0: usize,
    /// `l_nu` with `t_nu + s_min = t'_nu + e l_nu`.
    pub carries: Vec<i64>,
}

/// Shifts the smallest `s_mu` to zero, preserving the count.
///
/// The new divisor is `G - Div(f)` for the monomial `f` with
/// `i = (e+1)s_min`, `k_mu = -s_min` and `j_nu = -(q+1)s_min + l_nu`, where
/// `Div(f) = (e+1)s_min Q + s_min sum S0 + sum (e l_nu - s_min) S1(nu)
/// - ((e+1)s_min + e sum l_nu) P`. Hence `u' = u + (e+1)s_min + e sum l_nu`.
pub fn reduce_multi(params: &TowerParams, g: &MultiParams) -> Result<MultiReduction> {
    g.check(params)?;
    let e = params.e();
    if let Some(&bad) = g.s.iter().chain(&g.t).find(|&&c| !(0..e).contains(&c)) {
        return Err(Error::Precondition(format!(
            "reduce_multi needs 0 <= s_mu, t_nu < {e}, got {bad}"
        )));
    }
    let (mu0, s_min) = g
        .s
        .iter()
        .copied()
        .enumerate()
        .min_by_key(|&(idx, v)| (v, idx))
        .map(|(idx, v)| (idx + 1, v))
        .expect("q >= 2 gives a non-empty block");
    let carries: Vec<i64> = g.t.iter().map(|&t| (t + s_min) / e).collect();
    let t_hat: Vec<i64> = g.t.iter().map(|&t| (t + s_min) % e).collect();
    let lsum: i64 = carries.iter().sum();
    let r_hat = sub(g.r, mul(e + 1, s_min)?)?;
    let u_hat = add(add(g.u, mul(e + 1, s_min)?)?, mul(e, lsum)?)?;
    let out = MultiReduction {
        params: MultiParams {
            r: r_hat,
            s: g.s.iter().map(|&s| s - s_min).collect(),
            t: t_hat,
            u: u_hat,
        },
        s_min,
        mu0,
        carries,
    };
    debug_assert_eq!(g.degree(), out.params.degree());
    debug_assert_eq!(
        omega_multi_count(params, g),
        omega_multi_count(params, &out.params),
        "reduce_multi changed the count of {g:?}"
    );
    Ok(out)
}

/// Moves every `s_mu`, `t_nu` into `[0, e)` by the divisors of powers of
/// `z_3 - alpha_mu` and `z_2 - alpha_nu`; `r` is untouched and only `u`
/// absorbs the difference.
pub fn normalize_multi(params: &TowerParams, g: &MultiParams) -> Result<MultiParams> {
    g.check(params)?;
    let q = params.q();
    let e = params.e();
    let mut out = g.clone();
    // (z_3 - alpha_mu)^c: e c on S0(mu), -(q+1)c on every S1 and on P
    let mut csum = 0i64;
    for s in out.s.iter_mut() {
        let c = neg(floor_div(*s, e)?)?;
        *s = add(*s, mul(e, c)?)?;
        csum = add(csum, c)?;
    }
    let shift = mul(q + 1, csum)?;
    out.u = sub(out.u, shift)?;
    // (z_2 - alpha_nu)^d: e d on S1(nu), -e d on P
    for t in out.t.iter_mut() {
        let t1 = sub(*t, shift)?;
        let d = neg(floor_div(t1, e)?)?;
        *t = add(t1, mul(e, d)?)?;
        out.u = sub(out.u, mul(e, d)?)?;
    }
    Ok(out)
}

/// A threshold `R` with `#Omega = 1 - g + deg G` for all `r >= R`, clamped at 0.
///
/// Takes the smaller of two sufficient bounds: the reduction chain
/// (normalize, [`reduce_multi`], shift by `x_1^{u*}`-type monomials until
/// `u* <= u' < 2u*`, then require `r' >= r*`), and, for effective inputs,
/// the Riemann-Roch bound `deg G >= 2g - 1`.
pub fn effective_r_multi(params: &TowerParams, s: &[i64], t: &[i64], u: i64) -> Result<i64> {
    let g = MultiParams {
        r: 0,
        s: s.to_vec(),
        t: t.to_vec(),
        u,
    };
    let norm = normalize_multi(params, &g)?;
    let red = reduce_multi(params, &norm)?;
    let us = params.u_star();
    let beta = sub(floor_div(red.params.u, us)?, 1)?;
    let chain = sub(sub(params.r_star(), red.params.r)?, mul(us, beta)?)?;
    let mut bound = chain;
    if u >= 0 && s.iter().chain(t).all(|&c| c >= 0) {
        let rr = sub(2 * params.genus3() - 1, g.degree()?)?;
        bound = bound.min(rr);
    }
    Ok(bound.max(0))
}

/// `1 - g + r + sum s + sum t + u`, refused below [`effective_r_multi`].
pub fn closed_count_multi(params: &TowerParams, g: &MultiParams) -> Result<i64> {
    let bound = effective_r_multi(params, &g.s, &g.t, g.u)?;
    if g.r < bound {
        return Err(Error::Precondition(format!(
            "closed form needs r >= {bound}, got r = {}",
            g.r
        )));
    }
    add(1 - params.genus3(), g.degree()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{omega_count, AggParams};
    use crate::tower::{monomial_divisor_multi, Divisor};
    use proptest::prelude::*;

    fn tp(q: i64) -> TowerParams {
        TowerParams::new(q).unwrap()
    }

    fn mp(r: i64, s: &[i64], t: &[i64], u: i64) -> MultiParams {
        MultiParams {
            r,
            s: s.to_vec(),
            t: t.to_vec(),
            u,
        }
    }

    #[test]
    fn small_examples() {
        let p = tp(3);
        let pts = omega_multi_enumerate(&p, &MultiParams::zero(&p)).unwrap();
        assert_eq!(
            pts,
            vec![MultiLatticePoint {
                i: 0,
                j: vec![0, 0],
                k: vec![0, 0]
            }]
        );
        assert_eq!(omega_multi_count(&tp(2), &mp(0, &[0], &[0], 20)).unwrap(), 16);
        assert!(matches!(
            omega_multi_count(&p, &mp(0, &[0], &[0, 0], 0)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn closed_examples() {
        let p = tp(2);
        for (s, t, want) in [(0, 0, 14), (1, 0, 15), (0, 2, 16)] {
            let g = mp(6, &[s], &[t], 12);
            assert_eq!(closed_count_multi(&p, &g).unwrap(), want);
            assert_eq!(omega_multi_count(&p, &g).unwrap(), want);
        }
    }

    #[test]
    fn reduce_examples() {
        let p = tp(2);
        let g = mp(5, &[0], &[3], 7);
        let red = reduce_multi(&p, &g).unwrap();
        assert_eq!(red.params, g);

        let red = reduce_multi(&p, &mp(10, &[2], &[3], 20)).unwrap();
        assert_eq!(red.params, mp(-4, &[0], &[5], 34));
        assert_eq!((red.s_min, red.mu0, red.carries.clone()), (2, 1, vec![0]));

        let g = mp(20, &[4], &[5], 20);
        let red = reduce_multi(&p, &g).unwrap();
        assert_eq!(red.params, mp(-8, &[0], &[3], 54));
        assert_eq!(red.carries, vec![1]);
        assert_eq!(omega_multi_count(&p, &g).unwrap(), 45);
        assert_eq!(omega_multi_count(&p, &red.params).unwrap(), 45);

        assert!(reduce_multi(&p, &mp(0, &[6], &[0], 0)).is_err());
        assert!(reduce_multi(&p, &mp(0, &[0], &[-1], 0)).is_err());
    }

    #[test]
    fn reduction_is_a_monomial_translation() {
        let p = tp(3);
        let g = mp(3, &[7, 4], &[10, 2], 9);
        let red = reduce_multi(&p, &g).unwrap();
        let e = p.e();
        let s1 = red.s_min;
        let j: Vec<i64> = red.carries.iter().map(|l| -(p.q() + 1) * s1 + l).collect();
        let f = monomial_divisor_multi(&p, (e + 1) * s1, &j, &[-s1, -s1]).unwrap();
        let lhs = Divisor::new(&p, g.r, g.s.clone(), g.t.clone(), g.u).unwrap().sub(&f).unwrap();
        let rp = red.params;
        assert_eq!(lhs, Divisor::new(&p, rp.r, rp.s, rp.t, rp.u).unwrap());
    }

    #[test]
    fn normalize_keeps_count() {
        let p = tp(3);
        for g in [mp(5, &[-3, 14], &[30, -1], 40), mp(0, &[25, 0], &[0, 13], 10)] {
            let n = normalize_multi(&p, &g).unwrap();
            assert!(n.s.iter().chain(&n.t).all(|&c| (0..p.e()).contains(&c)));
            assert_eq!(n.r, g.r);
            assert_eq!(n.degree().unwrap(), g.degree().unwrap());
            assert_eq!(omega_multi_count(&p, &n).unwrap(), omega_multi_count(&p, &g).unwrap());
        }
    }

    proptest! {
        #[test]
        fn uniform_collapse(q in prop::sample::select(vec![2i64, 3, 4]),
                            r in -10i64..60, s in -10i64..60, t in -10i64..60, u in -10i64..60) {
            let p = tp(q);
            let a = AggParams::new(r, s, t, u);
            prop_assert_eq!(omega_multi_count(&p, &a.to_multi(&p)).unwrap(), omega_count(&p, &a).unwrap());
        }

        #[test]
        fn points_are_in_the_windows(r in 0i64..30, s in prop::collection::vec(0i64..30, 2),
                                     t in prop::collection::vec(0i64..30, 2), u in 0i64..60) {
            let p = tp(3);
            let g = mp(r, &s, &t, u);
            let gd = Divisor::new(&p, r, s.clone(), t.clone(), u).unwrap();
            let pts = omega_multi_enumerate(&p, &g).unwrap();
            prop_assert!(pts.windows(2).all(|w| w[0].i < w[1].i));
            for pt in pts {
                let d = monomial_divisor_multi(&p, pt.i, &pt.j, &pt.k).unwrap();
                prop_assert!(d.add(&gd).unwrap().is_effective());
            }
        }

        #[test]
        fn reduce_keeps_count(q in prop::sample::select(vec![2i64, 3]), r in -20i64..40,
                              seed in prop::collection::vec(0i64..12, 4), u in -10i64..60) {
            let p = tp(q);
            let m = p.block_len();
            let e = p.e();
            let s: Vec<i64> = seed[..m].iter().map(|v| v % e).collect();
            let t: Vec<i64> = seed[2..2 + m].iter().map(|v| (v * 5) % e).collect();
            let g = mp(r, &s, &t, u);
            let red = reduce_multi(&p, &g).unwrap();
            prop_assert_eq!(red.params.degree().unwrap(), g.degree().unwrap());
            prop_assert_eq!(omega_multi_count(&p, &red.params).unwrap(), omega_multi_count(&p, &g).unwrap());
        }

        #[test]
        fn closed_form_above_threshold(q in prop::sample::select(vec![2i64, 3]),
                                       s in prop::collection::vec(-10i64..40, 2),
                                       t in prop::collection::vec(-10i64..40, 2),
                                       u in -10i64..80, extra in 0i64..10) {
            let p = tp(q);
            let m = p.block_len();
            let r = effective_r_multi(&p, &s[..m], &t[..m], u).unwrap() + extra;
            let g = mp(r, &s[..m], &t[..m], u);
            prop_assert_eq!(omega_multi_count(&p, &g).unwrap(), closed_count_multi(&p, &g).unwrap());
        }
    }
}
