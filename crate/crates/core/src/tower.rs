//! Tower parameters, the distinguished places of `F^(3)` and divisors on them.
//!
//! The tower is `F^(1) = K(x_1)`, `F^(i+1) = F^(i)(z_{i+1})` with
//! `z_{i+1}^q + z_{i+1} = x_i^{q+1}` and `x_{i+1} = z_{i+1} / x_i`, over
//! `K = F_{q^2}`. Only integer data is modelled: the field elements
//! `alpha_mu` (roots of `a^{q-1} + 1`) appear solely through their index.
//!
//! At level 3 there are `2q` distinguished rational places:
//! `Q = (x_1 = x_2 = x_3 = 0)`, the `q - 1` zeros `S0(mu)` of `z_3 - alpha_mu`,
//! the `q - 1` zeros `S1(nu)` of `z_2 - alpha_nu`, and the pole `P` of `x_1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{add, floor_div, mul, neg, pow, sub, sum};
use crate::error::{Error, Result};

/// Largest supported `q`. Keeps every product in the enumerations far below
/// `i64::MAX` for coefficients up to `2^31`.
pub const MAX_Q: i64 = 64;

/// Returns true when `q` is `p^a` for a prime `p` and `a >= 1`.
pub fn is_prime_power(q: i64) -> bool {
    if q < 2 {
        return false;
    }
    let mut n = q;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            return n == 1;
        }
        p += 1;
    }
    // n is prime here
    true
}

/// The prime power `q` together with its derived constants.
///
/// Derived values are computed on demand from `q` and never cached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TowerParams {
    q: i64,
}

impl TowerParams {
    /// Validates that `q` is a prime power in `2..=MAX_Q`.
    pub fn new(q: i64) -> Result<Self> {
        let params = Self::with_prime_power_override(q)?;
        if !is_prime_power(q) {
            return Err(Error::NotPrimePower(q));
        }
        Ok(params)
    }

    /// Accepts any `q` in `2..=MAX_Q`, prime power or not.
    ///
    /// The lattice combinatorics never use the field structure, so the
    /// formulas can be exercised for arbitrary `q`; the results only have a
    /// geometric meaning for prime powers.
    pub fn with_prime_power_override(q: i64) -> Result<Self> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::QOutOfRange(q));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `q^2 + q`, the window width of every `S0`/`S1` constraint.
    pub fn e(&self) -> i64 {
        self.q * self.q + self.q
    }

    /// Genus of `F^(3)`: `q^3 - 2q + 1`.
    pub fn genus3(&self) -> i64 {
        self.q * self.q * self.q - 2 * self.q + 1
    }

    /// `r* = q^3 - q`.
    pub fn r_star(&self) -> i64 {
        self.q * self.q * self.q - self.q
    }

    /// `u* = q^3 + q^2`.
    pub fn u_star(&self) -> i64 {
        self.q * self.q * self.q + self.q * self.q
    }

    /// Number of indices `mu` (resp. `nu`) of the `S0` (resp. `S1`) places.
    pub fn block_len(&self) -> usize {
        (self.q - 1) as usize
    }

    /// Number of distinguished places on `F^(3)`.
    pub fn num_places(&self) -> usize {
        2 * self.q as usize
    }
}

/// Genus of `F^(n)`.
pub fn genus(params: &TowerParams, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::LevelOutOfRange(n));
    }
    let q = params.q();
    let n = u32::try_from(n).map_err(|_| Error::Overflow("genus"))?;
    let top = add(pow(q, n)?, pow(q, n - 1)?)?;
    if n % 2 == 1 {
        // n odd: (n + 1) / 2 = n / 2 + 1 and (n - 1) / 2 = n / 2
        let a = pow(q, n / 2 + 1)?;
        let b = mul(2, pow(q, n / 2)?)?;
        add(sub(sub(top, a)?, b)?, 1)
    } else {
        let h = n / 2;
        // (q^{h+1} + 3 q^h) is always even
        let halves = add(pow(q, h + 1)?, mul(3, pow(q, h)?)?)? / 2;
        add(sub(sub(top, halves)?, pow(q, h - 1)?)?, 1)
    }
}

/// Degree of the place group `S_i^(n)`.
pub fn deg_place_group(params: &TowerParams, i: i64, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::LevelOutOfRange(n));
    }
    if i < 0 || i > n - 2 {
        return Err(Error::IndexOutOfRange {
            what: "place group",
            index: i,
            lo: 0,
            hi: n - 2,
        });
    }
    let q = params.q();
    let exp = if 2 * i + 3 <= n { i } else { n - i - 2 };
    mul(pow(q, exp as u32)?, q - 1)
}

/// Identifies one of the `2q` distinguished rational places of `F^(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceId {
    Q,
    /// Zero of `z_3 - alpha_mu`, `1 <= mu <= q - 1`.
    S0(u32),
    /// Zero of `z_2 - alpha_nu`, `1 <= nu <= q - 1`.
    S1(u32),
    P,
}

impl PlaceId {
    pub fn validate(self, params: &TowerParams) -> Result<Self> {
        let hi = params.q() - 1;
        match self {
            PlaceId::S0(m) | PlaceId::S1(m) if m < 1 || i64::from(m) > hi => {
                Err(Error::IndexOutOfRange {
                    what: "place",
                    index: i64::from(m),
                    lo: 1,
                    hi,
                })
            }
            _ => Ok(self),
        }
    }

    /// All `2q` places in canonical order `Q, S0(1..), S1(1..), P`.
    pub fn all(params: &TowerParams) -> Vec<PlaceId> {
        let m = params.q() as u32 - 1;
        std::iter::once(PlaceId::Q)
            .chain((1..=m).map(PlaceId::S0))
            .chain((1..=m).map(PlaceId::S1))
            .chain(std::iter::once(PlaceId::P))
            .collect()
    }

    /// Place in the `Q`-block (`Q1 = Q`, `Q(mu+1) = S0(mu)`), 1-based.
    pub fn q_block(index: u32, params: &TowerParams) -> Result<PlaceId> {
        match index {
            1 => Ok(PlaceId::Q),
            m => PlaceId::S0(m.wrapping_sub(1)).validate(params),
        }
    }

    /// Place in the `P`-block (`P1 = P`, `P(nu+1) = S1(nu)`), 1-based.
    pub fn p_block(index: u32, params: &TowerParams) -> Result<PlaceId> {
        match index {
            1 => Ok(PlaceId::P),
            m => PlaceId::S1(m.wrapping_sub(1)).validate(params),
        }
    }

    /// Parses the block notation `Q1..Qq`, `P1..Pq`.
    pub fn parse_block_name(name: &str, params: &TowerParams) -> Result<PlaceId> {
        let bad = || Error::InvalidPlace(name.to_string());
        let (block, idx) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let idx: u32 = idx.parse().map_err(|_| bad())?;
        match block {
            "Q" => PlaceId::q_block(idx, params),
            "P" => PlaceId::p_block(idx, params),
            _ => Err(bad()),
        }
        .map_err(|_| bad())
    }

    /// Block notation name (`Q1`, `Q2`, ..., `P1`, ...).
    pub fn block_name(self) -> String {
        match self {
            PlaceId::Q => "Q1".into(),
            PlaceId::S0(m) => format!("Q{}", m + 1),
            PlaceId::P => "P1".into(),
            PlaceId::S1(m) => format!("P{}", m + 1),
        }
    }
}

impl fmt::Display for PlaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceId::Q => write!(f, "Q"),
            PlaceId::S0(m) => write!(f, "S0_{m}"),
            PlaceId::S1(m) => write!(f, "S1_{m}"),
            PlaceId::P => write!(f, "P"),
        }
    }
}

/// An integer combination of the `2q` distinguished places of `F^(3)`.
///
/// Every place has degree one, so the degree is the plain coefficient sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Divisor {
    pub q: i64,
    #[serde(rename = "Q")]
    pub q_coeff: i64,
    #[serde(rename = "S0")]
    pub s0: Vec<i64>,
    #[serde(rename = "S1")]
    pub s1: Vec<i64>,
    #[serde(rename = "P")]
    pub p: i64,
}

impl Divisor {
    pub fn zero(params: &TowerParams) -> Self {
        let m = params.block_len();
        Self {
            q: params.q(),
            q_coeff: 0,
            s0: vec![0; m],
            s1: vec![0; m],
            p: 0,
        }
    }

    pub fn new(params: &TowerParams, q_coeff: i64, s0: Vec<i64>, s1: Vec<i64>, p: i64) -> Result<Self> {
        let m = params.block_len();
        for v in [&s0, &s1] {
            if v.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
        }
        Ok(Self {
            q: params.q(),
            q_coeff,
            s0,
            s1,
            p,
        })
    }

    /// `rQ + s S0 + t S1 + uP` with `S0`, `S1` the full place groups.
    pub fn aggregate(params: &TowerParams, r: i64, s: i64, t: i64, u: i64) -> Self {
        let m = params.block_len();
        Self {
            q: params.q(),
            q_coeff: r,
            s0: vec![s; m],
            s1: vec![t; m],
            p: u,
        }
    }

    /// Checks that the divisor was built for `params` and has consistent lengths.
    pub fn check(&self, params: &TowerParams) -> Result<()> {
        if self.q != params.q() {
            return Err(Error::QMismatch {
                expected: params.q(),
                got: self.q,
            });
        }
        let m = params.block_len();
        for v in [&self.s0, &self.s1] {
            if v.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
        }
        Ok(())
    }

    fn index(&self, m: u32) -> Result<usize> {
        let hi = self.s0.len() as i64;
        if m < 1 || i64::from(m) > hi {
            return Err(Error::IndexOutOfRange {
                what: "place",
                index: i64::from(m),
                lo: 1,
                hi,
            });
        }
        Ok(m as usize - 1)
    }

    pub fn coeff(&self, place: PlaceId) -> Result<i64> {
        Ok(match place {
            PlaceId::Q => self.q_coeff,
            PlaceId::S0(m) => self.s0[self.index(m)?],
            PlaceId::S1(m) => self.s1[self.index(m)?],
            PlaceId::P => self.p,
        })
    }

    pub fn set_coeff(&mut self, place: PlaceId, value: i64) -> Result<()> {
        match place {
            PlaceId::Q => self.q_coeff = value,
            PlaceId::S0(m) => {
                let i = self.index(m)?;
                self.s0[i] = value;
            }
            PlaceId::S1(m) => {
                let i = self.index(m)?;
                self.s1[i] = value;
            }
            PlaceId::P => self.p = value,
        }
        Ok(())
    }

    /// Coefficients in canonical place order `Q, S0(1..), S1(1..), P`.
    pub fn coeffs(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(self.q_coeff)
            .chain(self.s0.iter().copied())
            .chain(self.s1.iter().copied())
            .chain(std::iter::once(self.p))
    }

    pub fn degree(&self) -> Result<i64> {
        sum(self.coeffs())
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs().all(|c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().all(|c| c == 0)
    }

    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        self.combine(other, add)
    }

    pub fn sub(&self, other: &Divisor) -> Result<Divisor> {
        self.combine(other, sub)
    }

    pub fn scale(&self, a: i64) -> Result<Divisor> {
        let f = |c: i64| mul(a, c);
        Ok(Divisor {
            q: self.q,
            q_coeff: f(self.q_coeff)?,
            s0: self.s0.iter().map(|&c| f(c)).collect::<Result<_>>()?,
            s1: self.s1.iter().map(|&c| f(c)).collect::<Result<_>>()?,
            p: f(self.p)?,
        })
    }

    fn combine(&self, other: &Divisor, op: fn(i64, i64) -> Result<i64>) -> Result<Divisor> {
        if self.q != other.q {
            return Err(Error::QMismatch {
                expected: self.q,
                got: other.q,
            });
        }
        let zip = |a: &[i64], b: &[i64]| -> Result<Vec<i64>> {
            a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect()
        };
        Ok(Divisor {
            q: self.q,
            q_coeff: op(self.q_coeff, other.q_coeff)?,
            s0: zip(&self.s0, &other.s0)?,
            s1: zip(&self.s1, &other.s1)?,
            p: op(self.p, other.p)?,
        })
    }
}

/// A divisor on `F^(n)` supported on `Q^(n)`, the place groups
/// `S_0^(n) .. S_{n-2}^(n)` and `P^(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralLevelDivisor {
    pub level: i64,
    pub q_coeff: i64,
    /// Coefficient of `S_i^(n)` at position `i`.
    pub groups: Vec<i64>,
    pub p: i64,
}

impl GeneralLevelDivisor {
    /// Degree with each group `S_i^(n)` weighted by its degree.
    pub fn weighted_degree(&self, params: &TowerParams) -> Result<i64> {
        let mut d = add(self.q_coeff, self.p)?;
        for (i, &c) in self.groups.iter().enumerate() {
            d = add(d, mul(c, deg_place_group(params, i as i64, self.level)?)?)?;
        }
        Ok(d)
    }
}

/// Principal divisor of `x_n` in `F^(n)`.
pub fn principal_divisor_xn(params: &TowerParams, n: i64) -> Result<GeneralLevelDivisor> {
    if n < 1 {
        return Err(Error::LevelOutOfRange(n));
    }
    let q = params.q();
    let mut groups = vec![0i64; (n - 1).max(0) as usize];
    let first_hi = floor_div(n - 3, 2)?;
    for i in 0..=first_hi {
        groups[i as usize] = neg(pow(q, (n - 2 - 2 * i) as u32)?)?;
    }
    for i in floor_div(n - 1, 2)?..=(n - 2) {
        groups[i as usize] = -1;
    }
    Ok(GeneralLevelDivisor {
        level: n,
        q_coeff: pow(q, (n - 1) as u32)?,
        groups,
        p: -1,
    })
}

/// Divisor of `x_1^i w^j v^k` on `F^(3)`, where `w = x_1^q / x_2` and
/// `v = x_1^q x_2^{q-1} / x_3`.
pub fn monomial_divisor_xwv(params: &TowerParams, i: i64, j: i64, k: i64) -> Result<Divisor> {
    let q = params.q();
    let e = params.e();
    let s0 = add(i, mul(e, k)?)?;
    let s1 = add(add(mul(q, i)?, mul(e, j)?)?, mul(q + 1, k)?)?;
    let q3 = q * q * q;
    let p = neg(add(
        add(mul(q * q, i)?, mul(q3 - q, j)?)?,
        mul(q3 + q * q - q - 1, k)?,
    )?)?;
    Ok(Divisor::aggregate(params, i, s0, s1, p))
}

/// Divisor of `x_1^i x_2^j x_3^k` on `F^(3)`.
pub fn monomial_divisor_x123(params: &TowerParams, i: i64, j: i64, k: i64) -> Result<Divisor> {
    let q = params.q();
    let qq = q * q;
    let qc = add(add(i, mul(q, j)?)?, mul(qq, k)?)?;
    let s0 = sub(add(i, mul(q, j)?)?, mul(q, k)?)?;
    let s1 = sub(sub(mul(q, i)?, mul(q, j)?)?, k)?;
    let p = neg(add(add(mul(qq, i)?, mul(q, j)?)?, k)?)?;
    Ok(Divisor::aggregate(params, qc, s0, s1, p))
}

/// Divisor of `x_1^i prod (z_2 - alpha_nu)^{j_nu} prod (z_3 - alpha_mu)^{k_mu}`.
pub fn monomial_divisor_multi(params: &TowerParams, i: i64, j: &[i64], k: &[i64]) -> Result<Divisor> {
    let q = params.q();
    let e = params.e();
    let m = params.block_len();
    for v in [j, k] {
        if v.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: v.len(),
            });
        }
    }
    let ksum = sum(k.iter().copied())?;
    let jsum = sum(j.iter().copied())?;
    let ktail = mul(q + 1, ksum)?;
    let s0 = k
        .iter()
        .map(|&km| add(i, mul(e, km)?))
        .collect::<Result<Vec<_>>>()?;
    let qi = mul(q, i)?;
    let s1 = j
        .iter()
        .map(|&jn| sub(add(qi, mul(e, jn)?)?, ktail))
        .collect::<Result<Vec<_>>>()?;
    let p = neg(add(add(mul(q * q, i)?, mul(e, jsum)?)?, ktail)?)?;
    Divisor::new(params, i, s0, s1, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tp(q: i64) -> TowerParams {
        TowerParams::new(q).unwrap()
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<i64> = (1..=32).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        assert_eq!(TowerParams::new(6), Err(Error::NotPrimePower(6)));
        assert_eq!(TowerParams::new(1), Err(Error::QOutOfRange(1)));
        assert_eq!(TowerParams::new(128), Err(Error::QOutOfRange(128)));
        assert_eq!(TowerParams::with_prime_power_override(6).unwrap().q(), 6);
    }

    #[test]
    fn derived_constants() {
        let p = tp(3);
        assert_eq!((p.e(), p.genus3(), p.r_star(), p.u_star()), (12, 22, 24, 36));
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let p = tp(q);
            assert_eq!(p.genus3(), genus(&p, 3).unwrap());
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&tp(2), 1).unwrap(), 0);
        assert_eq!(genus(&tp(2), 2).unwrap(), 1);
        assert_eq!(genus(&tp(2), 3).unwrap(), 5);
        assert_eq!(genus(&tp(3), 3).unwrap(), 22);
        for q in [2, 3, 4, 5, 7] {
            assert_eq!(genus(&tp(q), 1).unwrap(), 0);
            assert_eq!(genus(&tp(q), 2).unwrap(), q * (q - 1) / 2);
        }
        assert_eq!(genus(&tp(2), 0), Err(Error::LevelOutOfRange(0)));
    }

    #[test]
    fn place_group_degrees() {
        assert_eq!(deg_place_group(&tp(2), 0, 3).unwrap(), 1);
        assert_eq!(deg_place_group(&tp(3), 1, 3).unwrap(), 2);
        assert_eq!(deg_place_group(&tp(2), 0, 7).unwrap(), 1);
        assert_eq!(deg_place_group(&tp(3), 2, 7).unwrap(), 18);
        assert!(deg_place_group(&tp(3), 2, 3).is_err());
        assert!(deg_place_group(&tp(3), -1, 3).is_err());
    }

    #[test]
    fn principal_divisors_of_xn() {
        let d = principal_divisor_xn(&tp(2), 1).unwrap();
        assert_eq!((d.q_coeff, d.groups.clone(), d.p), (1, vec![], -1));
        let d = principal_divisor_xn(&tp(2), 3).unwrap();
        assert_eq!((d.q_coeff, d.groups.clone(), d.p), (4, vec![-2, -1], -1));
        let d = principal_divisor_xn(&tp(3), 2).unwrap();
        assert_eq!((d.q_coeff, d.groups.clone(), d.p), (3, vec![-1], -1));
    }

    #[test]
    fn principal_divisors_have_degree_zero() {
        for q in [2, 3, 4, 5] {
            let p = tp(q);
            for n in 1..=12 {
                let d = principal_divisor_xn(&p, n).unwrap();
                assert_eq!(d.weighted_degree(&p).unwrap(), 0, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn monomial_xwv_examples() {
        let p = tp(2);
        let d = monomial_divisor_xwv(&p, 1, 0, 0).unwrap();
        assert_eq!((d.q_coeff, d.s0.clone(), d.s1.clone(), d.p), (1, vec![1], vec![2], -4));
        let w = monomial_divisor_xwv(&p, 0, 1, 0).unwrap();
        assert_eq!((w.q_coeff, w.s0.clone(), w.s1.clone(), w.p), (0, vec![0], vec![6], -6));
        assert!(monomial_divisor_xwv(&tp(5), 0, 0, 0).unwrap().is_zero());
        // v at q = 3: (q^2+q) S0 + (q+1) S1 - (q^3+q^2-q-1) P
        let v = monomial_divisor_xwv(&tp(3), 0, 0, 1).unwrap();
        assert_eq!((v.s0[0], v.s1[0], v.p), (12, 4, -32));
    }

    #[test]
    fn monomial_multi_examples() {
        let p = tp(2);
        let d = monomial_divisor_multi(&p, 0, &[1], &[0]).unwrap();
        assert_eq!((d.s1.clone(), d.p), (vec![6], -6));
        let d = monomial_divisor_multi(&p, 0, &[0], &[1]).unwrap();
        assert_eq!((d.s0.clone(), d.s1.clone(), d.p), (vec![6], vec![-3], -3));
        assert!(monomial_divisor_multi(&tp(3), 0, &[0, 0], &[0, 0]).unwrap().is_zero());
        assert_eq!(
            monomial_divisor_multi(&tp(3), 0, &[0], &[0, 0]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn divisor_plumbing() {
        let p = tp(3);
        let x1 = monomial_divisor_xwv(&p, 1, 0, 0).unwrap();
        assert_eq!(x1.add(&x1).unwrap(), monomial_divisor_xwv(&p, 2, 0, 0).unwrap());
        assert!(x1.scale(0).unwrap().is_zero());
        assert_eq!(monomial_divisor_xwv(&p, 3, -1, 2).unwrap().degree().unwrap(), 0);
        assert!(monomial_divisor_xwv(&p, i64::MAX / 2, 0, 0).is_err());
        assert!(x1.scale(i64::MAX).is_err());
    }

    #[test]
    fn place_names() {
        let p = tp(3);
        assert_eq!(PlaceId::all(&p).len(), 6);
        assert_eq!(PlaceId::parse_block_name("Q1", &p).unwrap(), PlaceId::Q);
        assert_eq!(PlaceId::parse_block_name("Q3", &p).unwrap(), PlaceId::S0(2));
        assert_eq!(PlaceId::parse_block_name("P2", &p).unwrap(), PlaceId::S1(1));
        assert!(PlaceId::parse_block_name("Q4", &p).is_err());
        assert!(PlaceId::parse_block_name("Q0", &p).is_err());
        assert!(PlaceId::parse_block_name("X1", &p).is_err());
        for pl in PlaceId::all(&p) {
            assert_eq!(PlaceId::parse_block_name(&pl.block_name(), &p).unwrap(), pl);
        }
        assert!(PlaceId::S0(3).validate(&p).is_err());
    }

    #[test]
    fn divisor_json_shape() {
        let p = tp(3);
        let d = Divisor::aggregate(&p, 1, 2, 3, 4);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"q":3,"Q":1,"S0":[2,2],"S1":[3,3],"P":4}"#);
        let back: Divisor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    proptest! {
        #[test]
        fn xwv_degree_zero(q in prop::sample::select(vec![2i64, 3, 4, 5]),
                           i in -10i64..=10, j in -10i64..=10, k in -10i64..=10) {
            let p = tp(q);
            prop_assert_eq!(monomial_divisor_xwv(&p, i, j, k).unwrap().degree().unwrap(), 0);
        }

        #[test]
        fn xwv_additive(q in prop::sample::select(vec![2i64, 3, 4, 5]),
                        a in prop::array::uniform3(-50i64..50), b in prop::array::uniform3(-50i64..50)) {
            let p = tp(q);
            let lhs = monomial_divisor_xwv(&p, a[0] + b[0], a[1] + b[1], a[2] + b[2]).unwrap();
            let rhs = monomial_divisor_xwv(&p, a[0], a[1], a[2]).unwrap()
                .add(&monomial_divisor_xwv(&p, b[0], b[1], b[2]).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn x123_matches_xwv_substitution(q in prop::sample::select(vec![2i64, 3, 4, 5]),
                                         i in -20i64..20, j in -20i64..20, k in -20i64..20) {
            let p = tp(q);
            let lhs = monomial_divisor_xwv(&p, i, j, k).unwrap();
            let rhs = monomial_divisor_x123(&p, i + q * j + q * k, -j + (q - 1) * k, -k).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn multi_uniform_matches_xwv(q in prop::sample::select(vec![2i64, 3, 4, 5]),
                                     i in -20i64..20, j in -20i64..20, k in -20i64..20) {
            let p = tp(q);
            let m = p.block_len();
            let multi = monomial_divisor_multi(&p, i, &vec![j; m], &vec![k; m]).unwrap();
            prop_assert_eq!(multi.degree().unwrap(), 0);
            prop_assert_eq!(multi, monomial_divisor_xwv(&p, i, j - k, k).unwrap());
        }
    }
}
