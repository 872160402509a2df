//! The lattice-identity and predicate-agreement suites behind `verify`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    membership_oracle, membership_oracle_sel, omega_prime_raw_scan, omega_raw_scan, pure_gap_oracle_sel,
    required_box, required_prime_box,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::lattice::sums::{
    gamma1_sum, gamma1_sum_enumerated, phi1_sum, phi1_sum_enumerated, psi_sum, psi_sum_enumerated,
};
use crate::lattice::{
    closed_count, closed_count_multi, effective_r, effective_r_multi, omega_count, omega_count_profile,
    omega_multi_count, omega_multi_count_profile, omega_multi_enumerate, omega_prime_enumerate, reduce_multi,
    AggParams, MultiParams,
};
use crate::semigroup::{
    default_bound, enumerate_box, in_g0_by_increments, in_g0_qp, in_h_by_increments, in_h_qp, one_point_gaps,
    two_point_pure_gaps, PlaceSelection, TwoPoint,
};
use crate::tower::{PlaceId, TowerParams};

/// Largest `q` accepted by [`verify_suite`].
pub const MAX_VERIFY_Q: i64 = 5;

/// Mismatches kept verbatim in a report; the rest are only counted.
const MAX_LISTED: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `#Omega(r,s,t,u) = #Omega(u,t,s,r)`.
    Symmetry,
    /// Raw scan of the `x_1 x_2 x_3` set equals the image of `Omega`.
    Bijection,
    /// Linear growth above `(r*, u*)`.
    LinearGrowth,
    /// Closed counts above the effective thresholds.
    ClosedCount,
    /// Closed sums of the auxiliary sets.
    Sums,
    /// Multi-index counts with equal block entries match the aggregate set.
    UniformBlocks,
    /// Block permutations and the block swap preserve multi-index counts.
    Permutations,
    /// Count preservation under the multi-index reduction.
    Reduction,
    /// Raw scan of the multi-index set equals its enumeration.
    RawScan,
    /// Closed form, increment conditions and dimension oracle agree.
    Triple,
    /// One-point gap count equals the genus.
    GapGenus,
    /// Published gap sets.
    Golden,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Symmetry,
        Suite::Bijection,
        Suite::LinearGrowth,
        Suite::ClosedCount,
        Suite::Sums,
        Suite::UniformBlocks,
        Suite::Permutations,
        Suite::Reduction,
        Suite::RawScan,
        Suite::Triple,
        Suite::GapGenus,
        Suite::Golden,
    ];

    /// The lattice identities.
    pub const IDENTITIES: [Suite; 7] = [
        Suite::Symmetry,
        Suite::Bijection,
        Suite::LinearGrowth,
        Suite::Sums,
        Suite::UniformBlocks,
        Suite::Permutations,
        Suite::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetry => "symmetry",
            Suite::Bijection => "bijection",
            Suite::LinearGrowth => "linear-growth",
            Suite::ClosedCount => "closed-count",
            Suite::Sums => "sums",
            Suite::UniformBlocks => "uniform-blocks",
            Suite::Permutations => "permutations",
            Suite::Reduction => "reduction",
            Suite::RawScan => "raw-scan",
            Suite::Triple => "triple",
            Suite::GapGenus => "gap-genus",
            Suite::Golden => "golden",
        }
    }

    /// Parses a suite name or one of the groups `identities` and `all`.
    pub fn parse_group(name: &str) -> Result<Vec<Suite>> {
        match name {
            "all" => Ok(Suite::ALL.to_vec()),
            "identities" => Ok(Suite::IDENTITIES.to_vec()),
            _ => Ok(vec![name.parse()?]),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Scale of the parameter boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoxSize {
    Tiny,
    Default,
}

impl FromStr for BoxSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tiny" => Ok(BoxSize::Tiny),
            "default" => Ok(BoxSize::Default),
            _ => Err(Error::Precondition(format!("unknown box size {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub q: i64,
    pub parameter_box: String,
    pub checked: u64,
    pub mismatch_count: u64,
    /// The first mismatching inputs, rendered for display.
    pub mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatch_count == 0
    }
}

/// Runs one suite. Deterministic: results do not depend on the thread
/// count, and sampled suites use a fixed seed.
///
/// Supports `2 <= q <= 5`. For `q >= 4` the lattice suites use the tiny
/// boxes and the triple suite is restricted to arity at most two.
pub fn verify_suite(params: &TowerParams, suite: Suite, size: BoxSize) -> Result<VerificationReport> {
    let q = params.q();
    if q > MAX_VERIFY_Q {
        return Err(Error::Precondition(format!(
            "verification supports q <= {MAX_VERIFY_Q}, got q = {q}"
        )));
    }
    let size = if q >= 4 { BoxSize::Tiny } else { size };
    let start = Instant::now();
    let v = Verifier { p: *params, size };
    let (parameter_box, tally) = match suite {
        Suite::Symmetry => v.symmetry(),
        Suite::Bijection => v.bijection(),
        Suite::LinearGrowth => v.linear_growth(),
        Suite::ClosedCount => v.closed_count(),
        Suite::Sums => v.sums(),
        Suite::UniformBlocks => v.uniform_blocks(),
        Suite::Permutations => v.permutations(),
        Suite::Reduction => v.reduction(),
        Suite::RawScan => v.raw_scan(),
        Suite::Triple => v.triple(),
        Suite::GapGenus => v.gap_genus(),
        Suite::Golden => v.golden(),
    };
    Ok(VerificationReport {
        suite,
        q,
        parameter_box,
        checked: tally.checked,
        mismatch_count: tally.mismatch_count,
        mismatches: tally.mismatches,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}

#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    mismatch_count: u64,
    mismatches: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.mismatch_count += 1;
        if self.mismatches.len() < MAX_LISTED {
            self.mismatches.push(what);
        }
    }

    /// Records `Ok(true)` as a pass and anything else as a mismatch.
    fn check_res(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", what()));
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.mismatch_count += other.mismatch_count;
        for m in other.mismatches {
            if self.mismatches.len() < MAX_LISTED {
                self.mismatches.push(m);
            }
        }
    }
}

/// Runs `f` over `items` in parallel and merges the tallies in item order.
fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .collect();
    let mut out = Tally::default();
    for t in parts {
        out.merge(t);
    }
    out
}

/// `lo, lo + step, ...`, always ending at `hi`.
fn strided(lo: i64, hi: i64, step: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (lo..=hi).step_by(step.max(1) as usize).collect();
    if v.last() != Some(&hi) {
        v.push(hi);
    }
    v
}

/// Every vector of length `n` with entries from `values`, lexicographic.
fn grid(values: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        acc = acc
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    acc
}

struct Verifier {
    p: TowerParams,
    size: BoxSize,
}

impl Verifier {
    fn tiny(&self) -> bool {
        self.size == BoxSize::Tiny
    }

    fn q(&self) -> i64 {
        self.p.q()
    }

    fn m(&self) -> usize {
        self.p.block_len()
    }

    /// Upper end of the lattice boxes: `2u*`, or `u*` for tiny boxes, and
    /// `q^2 + q` for `q >= 4`, where the full tables outgrow memory.
    fn top(&self) -> i64 {
        if self.q() >= 4 {
            self.p.e()
        } else if self.tiny() {
            self.p.u_star()
        } else {
            2 * self.p.u_star()
        }
    }

    fn multi(&self, r: i64, s: &[i64], t: &[i64], u: i64) -> MultiParams {
        MultiParams {
            r,
            s: s.to_vec(),
            t: t.to_vec(),
            u,
        }
    }

    fn symmetry(&self) -> (String, Tally) {
        let top = self.top();
        let n = (top + 1) as usize;
        let stu: Vec<(i64, i64, i64)> = grid(&strided(0, top, 1), 3)
            .into_iter()
            .map(|v| (v[0], v[1], v[2]))
            .collect();
        // table[((s n + t) n + u) n + r] from one r-profile per (s, t, u)
        let profiles: Vec<Result<Vec<i64>>> = stu
            .par_iter()
            .map(|&(s, t, u)| omega_count_profile(&self.p, s, t, u, 0, top))
            .collect();
        let mut tally = Tally::default();
        let mut table = Vec::with_capacity(n * n * n * n);
        for (&(s, t, u), prof) in stu.iter().zip(profiles) {
            match prof {
                Ok(v) => table.extend(v.into_iter().map(|c| c as i32)),
                Err(e) => {
                    tally.fail(format!("(s,t,u)=({s},{t},{u}): {e}"));
                    table.extend(vec![-1; n]);
                }
            }
        }
        let at = |r: i64, s: i64, t: i64, u: i64| {
            let ix = |x: i64| x as usize;
            table[((ix(s) * n + ix(t)) * n + ix(u)) * n + ix(r)]
        };
        for &(s, t, u) in &stu {
            for r in 0..=top {
                let (a, b) = (at(r, s, t, u), at(u, t, s, r));
                tally.check(a == b, || format!("#({r},{s},{t},{u}) = {a} but #({u},{t},{s},{r}) = {b}"));
            }
        }
        (format!("(r,s,t,u) in [0,{top}]^4"), tally)
    }

    fn bijection(&self) -> (String, Tally) {
        let top = self.top();
        let step = match (self.q(), self.size) {
            (2, BoxSize::Default) => 1,
            (_, BoxSize::Default) => 4,
            _ => (top / 4).max(1),
        };
        let vals = strided(0, top, step);
        let tuples = grid(&vals, 4);
        let tally = par_tally(&tuples, |v, tally| {
            let g = AggParams::new(v[0], v[1], v[2], v[3]);
            let res = (|| {
                let mut want = omega_prime_enumerate(&self.p, &g)?;
                want.sort_unstable();
                let bx = required_prime_box(&self.p, &g)?;
                let got = omega_prime_raw_scan(&self.p, &g, &bx)?;
                Ok(got == want && want.len() as i64 == omega_count(&self.p, &g)?)
            })();
            tally.check_res(res, || format!("{g:?}"));
        });
        (format!("(r,s,t,u) in {{0,{step},..,{top}}}^4"), tally)
    }

    fn linear_growth(&self) -> (String, Tally) {
        let (q, rs, us) = (self.q(), self.p.r_star(), self.p.u_star());
        let span = if self.tiny() { us / 2 } else { 2 * us };
        let st = grid(&strided(0, q, 1), 2);
        let tally = par_tally(&st, |v, tally| {
            let (s, t) = (v[0], v[1]);
            let base = match omega_count(&self.p, &AggParams::new(rs, s, t, us)) {
                Ok(b) => b,
                Err(e) => return tally.fail(format!("(r*,{s},{t},u*): {e}")),
            };
            for u in us..=us + span {
                match omega_count_profile(&self.p, s, t, u, rs, rs + span) {
                    Ok(prof) => {
                        for (n, c) in prof.into_iter().enumerate() {
                            let r = rs + n as i64;
                            let want = base + (r - rs) + (u - us);
                            tally.check(c == want, || format!("({r},{s},{t},{u}): {c} != {want}"));
                        }
                    }
                    Err(e) => tally.fail(format!("(*,{s},{t},{u}): {e}")),
                }
            }
        });
        (
            format!("s,t in [0,{q}], u in [{us},{}], r in [{rs},{}]", us + span, rs + span),
            tally,
        )
    }

    fn closed_count(&self) -> (String, Tally) {
        let top = self.top();
        let g3 = self.p.genus3();
        let stu = grid(&strided(0, top, 1), 3);
        let mut tally = par_tally(&stu, |v, tally| {
            let (s, t, u) = (v[0], v[1], v[2]);
            let res = (|| {
                let big_r = effective_r(&self.p, s, t, u)?;
                let prof = omega_count_profile(&self.p, s, t, u, big_r, big_r + top)?;
                let mut bad = None;
                for (n, c) in prof.into_iter().enumerate() {
                    let r = big_r + n as i64;
                    let want = 1 - g3 + AggParams::new(r, s, t, u).degree(&self.p)?;
                    if c != want && bad.is_none() {
                        bad = Some(r);
                    }
                }
                if let Some(r) = bad {
                    return Err(Error::Precondition(format!("count differs at r = {r}")));
                }
                let g = AggParams::new(big_r, s, t, u);
                Ok(closed_count(&self.p, &g)? == omega_count(&self.p, &g)?)
            })();
            let ok = matches!(res, Ok(true));
            tally.check_res(res, || format!("(R..,{s},{t},{u})"));
            if ok {
                // one check per r in the profile, the closed_count call included
                tally.checked += top as u64;
            }
        });
        // Multi-index thresholds on a strided grid of unequal block entries.
        let m = self.m();
        let step = if self.tiny() { top / 2 } else { top / 4 }.max(1);
        let vecs = grid(&strided(0, top, step), 2 * m);
        let multi_u = strided(0, top, step);
        let items: Vec<(Vec<i64>, i64)> = vecs
            .iter()
            .flat_map(|v| multi_u.iter().map(move |&u| (v.clone(), u)))
            .collect();
        let multi = par_tally(&items, |(v, u), tally| {
            let (s, t) = v.split_at(m);
            let res = (|| {
                let big_r = effective_r_multi(&self.p, s, t, *u)?;
                let g = self.multi(big_r, s, t, *u);
                let prof = omega_multi_count_profile(&self.p, &g, big_r, big_r + top)?;
                for (n, c) in prof.into_iter().enumerate() {
                    let r = big_r + n as i64;
                    if c != closed_count_multi(&self.p, &self.multi(r, s, t, *u))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            tally.check_res(res, || format!("multi (R..,{s:?},{t:?},{u})"));
        });
        tally.merge(multi);
        (
            format!(
                "s,t,u in [0,{top}], r in [R,R+{top}]; multi s,t,u in {{0,{step},..,{top}}}"
            ),
            tally,
        )
    }

    fn sums(&self) -> (String, Tally) {
        let (top, us) = (self.top(), self.p.u_star());
        let mut tally = Tally::default();
        for u in us..=us + top {
            let res = (|| Ok(psi_sum(&self.p, u)? == psi_sum_enumerated(&self.p, u)?))();
            tally.check_res(res, || format!("psi u={u}"));
        }
        for t in 0..=top {
            let res = (|| Ok(phi1_sum(&self.p, t)? == phi1_sum_enumerated(&self.p, t)?))();
            tally.check_res(res, || format!("phi t={t}"));
            let res = (|| Ok(gamma1_sum(&self.p, t)? == gamma1_sum_enumerated(&self.p, t)?))();
            tally.check_res(res, || format!("gamma t1={t}"));
        }
        (format!("u in [{us},{}], t in [0,{top}]", us + top), tally)
    }

    fn uniform_blocks(&self) -> (String, Tally) {
        let (top, us) = (self.top(), self.p.u_star());
        let m = self.m();
        let step = match self.size {
            BoxSize::Default => 1,
            BoxSize::Tiny => (top / 6).max(1),
        };
        let stu = grid(&strided(0, top, step), 3);
        let mut items: Vec<(i64, i64, i64)> = stu.iter().map(|v| (v[0], v[1], v[2])).collect();
        // the zero case over negative u as well
        items.extend((-us..0).map(|u| (0, 0, u)));
        let tally = par_tally(&items, |&(s, t, u), tally| {
            let res = (|| {
                let g = self.multi(0, &vec![s; m], &vec![t; m], u);
                let (lo, hi) = if s == 0 && t == 0 { (-us, top) } else { (0, top) };
                let a = omega_count_profile(&self.p, s, t, u, lo, hi)?;
                let b = omega_multi_count_profile(&self.p, &g, lo, hi)?;
                Ok(a == b)
            })();
            tally.check_res(res, || format!("(*,{s},{t},{u})"));
        });
        (
            format!("s,t,u in {{0,{step},..,{top}}}, r in [0,{top}]; zero blocks with r in [-{us},{top}], u in [-{us},{top}]"),
            tally,
        )
    }

    /// The tuple `(r, s_1.., u, t_1..)` after each generator of the
    /// symmetry group: a transposition and a cycle in each block, and the
    /// block swap.
    fn generators(&self, a: &[i64], b: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
        let mut out = Vec::new();
        let mut push = |x: Vec<i64>, y: Vec<i64>| out.push((x, y));
        let transpose = |v: &[i64]| {
            let mut w = v.to_vec();
            w.swap(0, 1);
            w
        };
        let cycle = |v: &[i64]| {
            let mut w = v.to_vec();
            w.rotate_left(1);
            w
        };
        push(transpose(a), b.to_vec());
        push(a.to_vec(), transpose(b));
        if a.len() > 2 {
            push(cycle(a), b.to_vec());
            push(a.to_vec(), cycle(b));
        }
        push(b.to_vec(), a.to_vec());
        out
    }

    fn count_blocks(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        omega_multi_count(&self.p, &self.multi(a[0], &a[1..], &b[1..], b[0]))
    }

    fn permutations(&self) -> (String, Tally) {
        let (q, us) = (self.q(), self.p.u_star());
        let n = 2 * q as usize;
        let dense_hi = match (q, self.size) {
            (2, BoxSize::Default) => us,
            (2, BoxSize::Tiny) => us / 2,
            (3, BoxSize::Default) => 8,
            (3, BoxSize::Tiny) => 3,
            _ => 1,
        };
        let top = self.top();
        let wide_step = match (q, self.size) {
            (2, BoxSize::Default) => 4,
            (3, BoxSize::Default) => 12,
            _ => top,
        };
        let mut tuples = grid(&strided(0, dense_hi, 1), n);
        tuples.extend(grid(&strided(0, top, wide_step), n));
        let qs = q as usize;
        let tally = par_tally(&tuples, |v, tally| {
            let (a, b) = v.split_at(qs);
            let base = match self.count_blocks(a, b) {
                Ok(c) => c,
                Err(e) => return tally.fail(format!("{v:?}: {e}")),
            };
            for (x, y) in self.generators(a, b) {
                let res = self.count_blocks(&x, &y).map(|c| c == base);
                tally.check_res(res, || format!("{a:?}|{b:?} -> {x:?}|{y:?}"));
            }
        });
        (
            format!("(r,s..|u,t..) in [0,{dense_hi}]^{n} and {{0,{wide_step},..,{top}}}^{n}"),
            tally,
        )
    }

    fn reduction(&self) -> (String, Tally) {
        let (e, rs, us) = (self.p.e(), self.p.r_star(), self.p.u_star());
        let m = self.m();
        let hi = match (self.q(), self.size) {
            (q, _) if q >= 4 => 3,
            (_, BoxSize::Tiny) => (e - 1).min(4),
            _ => e - 1,
        };
        let vecs = grid(&strided(0, hi, 1), 2 * m);
        let tally = par_tally(&vecs, |v, tally| {
            let (s, t) = v.split_at(m);
            for r in [0, rs] {
                let g = self.multi(r, s, t, us);
                let res = (|| {
                    let red = reduce_multi(&self.p, &g)?;
                    Ok(omega_multi_count(&self.p, &g)? == omega_multi_count(&self.p, &red.params)?)
                })();
                tally.check_res(res, || format!("{g:?}"));
            }
        });
        (format!("s,t in [0,{hi}]^{m}, r in {{0,{rs}}}, u = {us}"), tally)
    }

    fn raw_scan(&self) -> (String, Tally) {
        let (top, m) = (self.top(), self.m());
        let step = match (self.q(), self.size) {
            (2, BoxSize::Default) => 2,
            (_, BoxSize::Default) => (top / 4).max(1),
            _ => top,
        };
        let vals = strided(0, top, step);
        let tuples = grid(&vals, 2 * m + 2);
        let tally = par_tally(&tuples, |v, tally| {
            let g = self.multi(v[0], &v[1..=m], &v[m + 1..2 * m + 1], v[2 * m + 1]);
            let res = (|| {
                let bx = required_box(&self.p, &g)?;
                Ok(omega_raw_scan(&self.p, &g, &bx)? == omega_multi_enumerate(&self.p, &g)?)
            })();
            tally.check_res(res, || format!("{g:?}"));
        });
        (format!("(r,s,t,u) in {{0,{step},..,{top}}}^{}", 2 * m + 2), tally)
    }

    fn triple(&self) -> (String, Tally) {
        let q = self.q();
        let g3 = self.p.genus3();
        let hi = 2 * g3;
        let (max_arity, exhaustive_limit, samples) = match (q, self.size) {
            (2 | 3, BoxSize::Default) => (2 * q as usize, 100_000u64, 10_000usize),
            (2 | 3, BoxSize::Tiny) => (2 * q as usize, 2_000, 300),
            _ => (2, 0, 500),
        };
        let mut tally = Tally::default();
        let mut desc = Vec::new();
        for k in 0..=q as usize {
            for l in 0..=q as usize {
                if k + l == 0 || k + l > max_arity {
                    continue;
                }
                let sel = PlaceSelection { k, l };
                let arity = (k + l) as u32;
                let total = ((hi + 1) as u64).saturating_pow(arity);
                let tuples: Vec<Vec<i64>> = if total <= exhaustive_limit {
                    desc.push(format!("{k}+{l}: all"));
                    grid(&strided(0, hi, 1), k + l)
                } else {
                    desc.push(format!("{k}+{l}: {samples} sampled"));
                    let seed = (q as u64) << 16 | (k as u64) << 8 | l as u64;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..samples)
                        .map(|_| (0..k + l).map(|_| rng.gen_range(0..=hi)).collect())
                        .collect()
                };
                let part = par_tally(&tuples, |v, tally| self.triple_one(&sel, v, tally));
                tally.merge(part);
            }
        }
        (format!("tuples in [0,{hi}]^(k+l); {}", desc.join(", ")), tally)
    }

    fn triple_one(&self, sel: &PlaceSelection, v: &[i64], tally: &mut Tally) {
        let (s, t) = v.split_at(sel.k);
        let p = &self.p;
        let h = (|| {
            let a = in_h_qp(p, sel, s, t)?;
            let b = in_h_by_increments(p, sel, s, t)?;
            let c = membership_oracle_sel(p, sel, s, t)?;
            Ok::<_, Error>((a, b, c))
        })();
        let in_h = match h {
            Ok((a, b, c)) => {
                tally.check(a == b && b == c, || {
                    format!("H {sel:?} {v:?}: closed {a}, increments {b}, oracle {c}")
                });
                a
            }
            Err(e) => return tally.fail(format!("H {sel:?} {v:?}: {e}")),
        };
        if v.iter().any(|&x| x < 1) {
            return;
        }
        let g0 = (|| {
            let a = in_g0_qp(p, sel, s, t)?;
            let b = in_g0_by_increments(p, sel, s, t)?;
            let c = pure_gap_oracle_sel(p, sel, s, t)?;
            Ok::<_, Error>((a, b, c))
        })();
        match g0 {
            Ok((a, b, c)) => {
                tally.check(a == b && b == c, || {
                    format!("G0 {sel:?} {v:?}: closed {a}, increments {b}, oracle {c}")
                });
                tally.check(!(a && in_h), || format!("{sel:?} {v:?} is in H and G0"));
            }
            Err(e) => tally.fail(format!("G0 {sel:?} {v:?}: {e}")),
        }
    }

    fn oracle_one_point_gaps(&self) -> Result<Vec<i64>> {
        let hi = 2 * self.p.genus3();
        let flags: Vec<Result<bool>> = (1..=hi)
            .into_par_iter()
            .map(|a| membership_oracle(&self.p, &[PlaceId::Q], &[a]).map(|m| !m))
            .collect();
        let mut out = Vec::new();
        for (a, f) in (1..=hi).zip(flags) {
            if f? {
                out.push(a);
            }
        }
        Ok(out)
    }

    fn gap_genus(&self) -> (String, Tally) {
        let g3 = self.p.genus3();
        let mut tally = Tally::default();
        match one_point_gaps(&self.p) {
            Ok(gaps) => {
                tally.check(gaps.len() as i64 == g3, || format!("{} gaps, genus {g3}", gaps.len()));
                let max = gaps.last().copied().unwrap_or(0);
                tally.check(max < 2 * g3, || format!("largest gap {max} > 2g-1"));
                let oracle = self.oracle_one_point_gaps();
                tally.check_res(oracle.map(|o| o == gaps), || "closed form vs oracle gap list".into());
            }
            Err(e) => tally.fail(format!("one_point_gaps: {e}")),
        }
        (format!("alpha in [1,{}]", 2 * g3), tally)
    }

    fn golden(&self) -> (String, Tally) {
        let q = self.q();
        let mut tally = Tally::default();
        let fixture: Option<&[i64]> = match q {
            2 => Some(&fixtures::ONE_POINT_Q2),
            5 => Some(&fixtures::ONE_POINT_Q5),
            _ => None,
        };
        let gaps = one_point_gaps(&self.p);
        let oracle = self.oracle_one_point_gaps();
        match (&gaps, &oracle) {
            (Ok(g), Ok(o)) => {
                tally.check(g == o, || "one-point closed form vs oracle".into());
                if let Some(f) = fixture {
                    tally.check(g.as_slice() == f, || format!("one-point list vs {}-entry fixture", f.len()));
                }
            }
            _ => tally.fail(format!("one-point: {gaps:?} {oracle:?}")),
        }
        let mut desc = format!("one-point alpha in [1,{}]", 2 * self.p.genus3());
        if q == 3 {
            let bound = default_bound(&self.p);
            for (pair, pairs, diag) in [
                (TwoPoint::QQ, &fixtures::TWO_POINT_QQ_Q3[..], &fixtures::TWO_POINT_QQ_Q3_DIAGONAL[..]),
                (TwoPoint::QP, &fixtures::TWO_POINT_QP_Q3[..], &fixtures::TWO_POINT_QP_Q3_DIAGONAL[..]),
            ] {
                let want = fixtures::symmetric_closure(pairs, diag);
                let sel = pair.selection();
                let closed = two_point_pure_gaps(&self.p, pair, bound);
                let oracle = enumerate_box(2, bound, |x| pure_gap_oracle_sel(&self.p, &sel, &x[..sel.k], &x[sel.k..]));
                match (closed, oracle) {
                    (Ok(c), Ok(o)) => {
                        let o: Vec<(i64, i64)> = o.into_iter().map(|v| (v[0], v[1])).collect();
                        tally.check(c == want, || format!("{pair:?}: {} tuples vs {}-tuple fixture", c.len(), want.len()));
                        tally.check(o == want, || format!("{pair:?}: oracle {} tuples vs {}-tuple fixture", o.len(), want.len()));
                    }
                    (c, o) => tally.fail(format!("{pair:?}: {:?} {:?}", c.err(), o.err())),
                }
            }
            desc.push_str(&format!("; two-point (a,b) in [1,{bound}]^2"));
        }
        (desc, tally)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_group("all").unwrap().len(), 12);
        assert!(Suite::parse_group("nope").is_err());
    }

    #[test]
    fn tiny_suites_pass_q2() {
        let p = TowerParams::new(2).unwrap();
        for s in Suite::ALL {
            let r = verify_suite(&p, s, BoxSize::Tiny).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.checked > 0, "{s}");
        }
    }

    #[test]
    fn rejects_large_q() {
        let p = TowerParams::new(7).unwrap();
        assert!(verify_suite(&p, Suite::Golden, BoxSize::Tiny).is_err());
    }
}
