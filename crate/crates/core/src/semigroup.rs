//! Weierstrass semigroups and pure gaps at the places
//! `Q_1 = Q, Q_{mu+1} = S0(mu)` and `P_1 = P, P_{nu+1} = S1(nu)`.
//!
//! The closed forms compare nested ceilings of rationals with integers.
//! Every comparison is cleared of denominators: `ceil(a/b + c/d)` is computed
//! as `ceil_div(ad + cb, bd)` and a bound `x <= y/q` as `q x <= y`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{add, ceil_div, mul, sub};
use crate::error::{Error, Result};
use crate::lattice::MultiParams;
use crate::tower::{PlaceId, TowerParams};

/// The first `k` places of the `Q`-block and the first `l` of the `P`-block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PlaceSelection {
    pub k: usize,
    pub l: usize,
}

impl PlaceSelection {
    /// Requires `0 <= k, l <= q` and `k + l >= 1`.
    pub fn new(params: &TowerParams, k: usize, l: usize) -> Result<Self> {
        let q = params.q() as usize;
        if k > q || l > q || k + l == 0 {
            return Err(Error::Precondition(format!(
                "place selection needs 0 <= k, l <= {q} and k + l >= 1, got k = {k}, l = {l}"
            )));
        }
        Ok(Self { k, l })
    }

    /// Reads a list such as `Q1,Q2,P1`. The places must be `Q1..Qk` followed
    /// by `P1..Pl`, in that order.
    pub fn from_places(params: &TowerParams, places: &[PlaceId]) -> Result<Self> {
        let k = places.iter().take_while(|p| matches!(p, PlaceId::Q | PlaceId::S0(_))).count();
        let sel = Self::new(params, k, places.len() - k)?;
        if sel.places(params)? != places {
            return Err(Error::Precondition(
                "places must be Q1..Qk followed by P1..Pl".into(),
            ));
        }
        Ok(sel)
    }

    pub fn places(&self, params: &TowerParams) -> Result<Vec<PlaceId>> {
        let q_block = (1..=self.k as u32).map(|n| PlaceId::q_block(n, params));
        let p_block = (1..=self.l as u32).map(|n| PlaceId::p_block(n, params));
        q_block.chain(p_block).collect()
    }

    pub fn arity(&self) -> usize {
        self.k + self.l
    }

    fn check(&self, s: &[i64], t: &[i64]) -> Result<()> {
        for (v, want) in [(s, self.k), (t, self.l)] {
            if v.len() != want {
                return Err(Error::LengthMismatch {
                    expected: want,
                    got: v.len(),
                });
            }
        }
        Ok(())
    }
}

/// The divisor `sum s_j Q_j + sum t_i P_i` as lattice parameters.
pub fn selection_params(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<MultiParams> {
    sel.check(s, t)?;
    let mut g = MultiParams::zero(params);
    for (n, &c) in s.iter().enumerate() {
        match n {
            0 => g.r = c,
            m => g.s[m - 1] = c,
        }
    }
    for (n, &c) in t.iter().enumerate() {
        match n {
            0 => g.u = c,
            m => g.t[m - 1] = c,
        }
    }
    Ok(g)
}

/// One side of the closed form: `own` is the coordinate vector of the block
/// containing the place, `other` the opposite block, each padded to length
/// `q` conceptually by zeros (`own.len() = k`, `other.len() = l`).
fn side_value(params: &TowerParams, idx: usize, own: &[i64], other: &[i64]) -> Result<i64> {
    let q = params.q();
    let e = params.e();
    let sj = own[idx];
    let mut a = 0i64;
    for (mu, &sm) in own.iter().enumerate() {
        if mu != idx {
            a = add(a, ceil_div(sub(sj, sm)?, e)?)?;
        }
    }
    let b = ceil_div(sj, e)?;
    let inner = add(a, mul(q - own.len() as i64, b)?)?;
    let e_inner = mul(e, inner)?;
    let mut total = 0i64;
    for &tn in other {
        let num = add(mul(q, sub(mul(q, sj)?, tn)?)?, e_inner)?;
        total = add(total, ceil_div(num, q * e)?)?;
    }
    let tail = ceil_div(add(mul(q, sj)?, mul(q + 1, inner)?)?, e)?;
    add(total, mul(q - other.len() as i64, tail)?)
}

fn index_check(what: &'static str, idx: usize, len: usize) -> Result<usize> {
    if idx < 1 || idx > len {
        return Err(Error::IndexOutOfRange {
            what,
            index: idx as i64,
            lo: 1,
            hi: len as i64,
        });
    }
    Ok(idx - 1)
}

/// `S_j(l, k)` for `1 <= j <= k`.
pub fn s_value(params: &TowerParams, sel: &PlaceSelection, j: usize, s: &[i64], t: &[i64]) -> Result<i64> {
    sel.check(s, t)?;
    side_value(params, index_check("j", j, sel.k)?, s, t)
}

/// `T_i(k, l)` for `1 <= i <= l`: `S` with the blocks exchanged.
pub fn t_value(params: &TowerParams, sel: &PlaceSelection, i: usize, s: &[i64], t: &[i64]) -> Result<i64> {
    sel.check(s, t)?;
    side_value(params, index_check("i", i, sel.l)?, t, s)
}

fn non_negative(s: &[i64], t: &[i64]) -> Result<()> {
    match s.iter().chain(t).find(|&&c| c < 0) {
        Some(&value) => Err(Error::NegativeCoefficient { name: "tuple", value }),
        None => Ok(()),
    }
}

fn positive(s: &[i64], t: &[i64]) -> Result<()> {
    match s.iter().chain(t).find(|&&c| c < 1) {
        Some(&value) => Err(Error::Precondition(format!(
            "pure gaps have all entries >= 1, got {value}"
        ))),
        None => Ok(()),
    }
}

/// Comparison of every coordinate with its closed-form value.
fn all_sides(params: &TowerParams, s: &[i64], t: &[i64], cmp: fn(i64, i64) -> bool) -> Result<bool> {
    for idx in 0..s.len() {
        if !cmp(side_value(params, idx, s, t)?, s[idx]) {
            return Ok(false);
        }
    }
    for idx in 0..t.len() {
        if !cmp(side_value(params, idx, t, s)?, t[idx]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(s_1..s_k) in H(Q_1..Q_k)`: for every `j`,
/// `ceil(s_j/(q+1) + inner/q) <= s_j/q`, cleared to
/// `q * ceil_div(q s_j + (q+1) inner, q(q+1)) <= s_j`.
pub fn in_h_q(params: &TowerParams, s: &[i64]) -> Result<bool> {
    non_negative(s, &[])?;
    if s.is_empty() || s.len() > params.q() as usize {
        return Err(Error::Precondition(format!("need 1..={} coordinates", params.q())));
    }
    let (q, e) = (params.q(), params.e());
    for (idx, &sj) in s.iter().enumerate() {
        let mut a = 0i64;
        for (mu, &sm) in s.iter().enumerate() {
            if mu != idx {
                a = add(a, ceil_div(sub(sj, sm)?, e)?)?;
            }
        }
        let inner = add(a, mul(q - s.len() as i64, ceil_div(sj, e)?)?)?;
        let c = ceil_div(add(mul(q, sj)?, mul(q + 1, inner)?)?, e)?;
        if mul(q, c)? > sj {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(s, t) in H(Q_1..Q_k, P_1..P_l)`: `S_j <= s_j` and `T_i <= t_i` throughout.
pub fn in_h_qp(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<bool> {
    sel.check(s, t)?;
    non_negative(s, t)?;
    all_sides(params, s, t, |v, c| v <= c)
}

/// Pure gap at `Q_1..Q_k`: the closed-form ceiling exceeds `s_j/q` for all `j`.
pub fn in_g0_q(params: &TowerParams, s: &[i64]) -> Result<bool> {
    positive(s, &[])?;
    let sel = PlaceSelection::new(params, s.len(), 0)?;
    in_g0_qp(params, &sel, s, &[])
}

/// Pure gap at `Q_1..Q_k, P_1..P_l`: `S_j > s_j` and `T_i > t_i` throughout.
pub fn in_g0_qp(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<bool> {
    sel.check(s, t)?;
    positive(s, t)?;
    all_sides(params, s, t, |v, c| v > c)
}

/// One-point gap test at `Q`: with `alpha = e m + r`, `1 <= r < e`, `alpha`
/// is a gap iff `ceil(r/(q+1) - (m+1)/q) > r/q - 1`, cleared to
/// `q * ceil_div(q r - (q+1)(m+1), q(q+1)) > r - q`. Multiples of `e` are
/// never gaps.
pub fn one_point_gap(params: &TowerParams, alpha: i64) -> Result<bool> {
    if alpha < 1 {
        return Err(Error::Precondition(format!("gap test needs alpha >= 1, got {alpha}")));
    }
    let (q, e) = (params.q(), params.e());
    let (m, r) = (alpha / e, alpha % e);
    if r == 0 {
        return Ok(false);
    }
    let c = ceil_div(sub(mul(q, r)?, mul(q + 1, m + 1)?)?, e)?;
    Ok(mul(q, c)? > r - q)
}

/// All gaps of `H(Q)` in ascending order; there are exactly `g` of them.
pub fn one_point_gaps(params: &TowerParams) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for alpha in 1..=2 * params.genus3() {
        if one_point_gap(params, alpha)? {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Default per-coordinate bound `2g - 1`.
pub fn default_bound(params: &TowerParams) -> i64 {
    2 * params.genus3() - 1
}

/// Every tuple in `[1, bound]^(k+l)` satisfying `pred`, in lexicographic order.
pub fn enumerate_box<F>(arity: usize, bound: i64, pred: F) -> Result<Vec<Vec<i64>>>
where
    F: Fn(&[i64]) -> Result<bool> + Sync,
{
    if arity == 0 || bound < 1 {
        return Ok(Vec::new());
    }
    // Parallel over the first coordinate; each chunk is scanned in order.
    let chunks: Vec<Result<Vec<Vec<i64>>>> = (1..=bound)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut cur = vec![1i64; arity];
            cur[0] = first;
            loop {
                if pred(&cur)? {
                    out.push(cur.clone());
                }
                let mut pos = arity - 1;
                loop {
                    if pos == 0 {
                        return Ok(out);
                    }
                    if cur[pos] < bound {
                        cur[pos] += 1;
                        break;
                    }
                    cur[pos] = 1;
                    pos -= 1;
                }
            }
        })
        .collect();
    let mut all = Vec::new();
    for c in chunks {
        all.extend(c?);
    }
    Ok(all)
}

/// Pure gaps at a selection with every coordinate in `[1, bound]`.
pub fn pure_gaps(params: &TowerParams, sel: &PlaceSelection, bound: i64) -> Result<Vec<Vec<i64>>> {
    enumerate_box(sel.arity(), bound, |x| in_g0_qp(params, sel, &x[..sel.k], &x[sel.k..]))
}

/// The two-point pairs with closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwoPoint {
    /// `(Q_1, Q_2) = (Q, S0(1))`.
    QQ,
    /// `(Q_1, P_1) = (Q, P)`.
    QP,
}

impl TwoPoint {
    pub fn selection(self) -> PlaceSelection {
        match self {
            TwoPoint::QQ => PlaceSelection { k: 2, l: 0 },
            TwoPoint::QP => PlaceSelection { k: 1, l: 1 },
        }
    }
}

/// Two-point pure gaps with both coordinates in `[1, bound]`.
pub fn two_point_pure_gaps(params: &TowerParams, pair: TwoPoint, bound: i64) -> Result<Vec<(i64, i64)>> {
    Ok(pure_gaps(params, &pair.selection(), bound)?
        .into_iter()
        .map(|v| (v[0], v[1]))
        .collect())
}

/// Whether lowering the coefficient of `place` in `G` by one lowers `#Omega`
/// by one.
///
/// With `s_0` the coordinate itself, `s_1..s_{q-1}` the rest of its block
/// and `t_0..t_{q-1}` the opposite block, the condition is
/// `sum_nu ceil((q s_0 - t_nu)/e + (1/q) sum_mu ceil((s_0 - s_mu)/e)) <= s_0`.
/// The count is invariant under permutations inside a block and under
/// exchanging the blocks, so one formula covers all `2q` places.
pub fn increment_condition(params: &TowerParams, g: &MultiParams, place: PlaceId) -> Result<bool> {
    g.check(params)?;
    let place = place.validate(params)?;
    let q_block: Vec<i64> = std::iter::once(g.r).chain(g.s.iter().copied()).collect();
    let p_block: Vec<i64> = std::iter::once(g.u).chain(g.t.iter().copied()).collect();
    let (own, other, idx) = match place {
        PlaceId::Q => (&q_block, &p_block, 0),
        PlaceId::S0(m) => (&q_block, &p_block, m as usize),
        PlaceId::P => (&p_block, &q_block, 0),
        PlaceId::S1(m) => (&p_block, &q_block, m as usize),
    };
    let (q, e) = (params.q(), params.e());
    let s0 = own[idx];
    let mut a = 0i64;
    for (mu, &sm) in own.iter().enumerate() {
        if mu != idx {
            a = add(a, ceil_div(sub(s0, sm)?, e)?)?;
        }
    }
    let ea = mul(e, a)?;
    let mut total = 0i64;
    for &tn in other {
        // ceil((q s0 - t)/e + a/q) = ceil_div(q(q s0 - t) + e a, q e)
        total = add(total, ceil_div(add(mul(q, sub(mul(q, s0)?, tn)?)?, ea)?, q * e)?)?;
    }
    Ok(total <= s0)
}

/// Membership in `H` through the increment conditions at every selected place.
pub fn in_h_by_increments(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<bool> {
    non_negative(s, t)?;
    let g = selection_params(params, sel, s, t)?;
    for place in sel.places(params)? {
        if !increment_condition(params, &g, place)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pure gap through the increment conditions: `l(G) = l(G - sum places)`
/// means no single step down from `G` along the selected places increases
/// the count. Walks the staircase `G, G - Q_1, G - Q_1 - Q_2, ...` and
/// requires every step to be flat.
pub fn in_g0_by_increments(params: &TowerParams, sel: &PlaceSelection, s: &[i64], t: &[i64]) -> Result<bool> {
    positive(s, t)?;
    let mut g = selection_params(params, sel, s, t)?;
    for place in sel.places(params)? {
        if increment_condition(params, &g, place)? {
            return Ok(false);
        }
        match place {
            PlaceId::Q => g.r -= 1,
            PlaceId::S0(m) => g.s[m as usize - 1] -= 1,
            PlaceId::P => g.u -= 1,
            PlaceId::S1(m) => g.t[m as usize - 1] -= 1,
        }
    }
    Ok(true)
}
