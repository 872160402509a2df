//! Monomial bases and dimensions of `L(G)` for `G` supported on the `2q`
//! distinguished places.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    omega_enumerate, omega_multi_count, omega_multi_enumerate, omega_prime_enumerate, reduce_aggregate,
    AggParams, LatticePoint3, MultiParams, ReductionResult,
};
use crate::tower::{
    monomial_divisor_multi, monomial_divisor_x123, monomial_divisor_xwv, Divisor, TowerParams,
};

/// Which monomials the exponent tuples refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisVariant {
    /// `x_1^i w^j v^k`, tuples `[i, j, k]`.
    #[serde(rename = "XWV")]
    Xwv,
    /// `x_1^i x_2^j x_3^k`, tuples `[i, j, k]`.
    #[serde(rename = "X1X2X3")]
    X1X2X3,
    /// `x_1^i prod (z_2 - alpha_nu)^{j_nu} prod (z_3 - alpha_mu)^{k_mu}`,
    /// tuples `[i, j_1.., k_1..]`.
    #[serde(rename = "MULTI")]
    Multi,
}

/// A monomial basis of `L(G)`, kept as exponent data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialBasis {
    pub variant: BasisVariant,
    pub q: i64,
    #[serde(rename = "G")]
    pub g: Divisor,
    pub exponents: Vec<Vec<i64>>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Principal divisor of the `n`-th basis element.
    pub fn element_divisor(&self, params: &TowerParams, n: usize) -> Result<Divisor> {
        let e = &self.exponents[n];
        match self.variant {
            BasisVariant::Xwv => monomial_divisor_xwv(params, e[0], e[1], e[2]),
            BasisVariant::X1X2X3 => monomial_divisor_x123(params, e[0], e[1], e[2]),
            BasisVariant::Multi => {
                let m = params.block_len();
                monomial_divisor_multi(params, e[0], &e[1..1 + m], &e[1 + m..])
            }
        }
    }

    /// Checks `Div(f) + G >= 0` for every element and that the valuations
    /// at `Q` are pairwise distinct. Returns the first violation found.
    pub fn check(&self, params: &TowerParams) -> Result<()> {
        self.g.check(params)?;
        let mut vq = Vec::with_capacity(self.len());
        for n in 0..self.len() {
            let d = self.element_divisor(params, n)?;
            if !d.add(&self.g)?.is_effective() {
                return Err(Error::Precondition(format!(
                    "element {:?} is not in L(G)",
                    self.exponents[n]
                )));
            }
            vq.push(d.q_coeff);
        }
        vq.sort_unstable();
        if vq.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("repeated valuation at Q".into()));
        }
        Ok(())
    }
}

fn require_effective(g: &AggParams) -> Result<()> {
    for (name, value) in [("r", g.r), ("s", g.s), ("t", g.t), ("u", g.u)] {
        if value < 0 {
            return Err(Error::NegativeCoefficient { name, value });
        }
    }
    Ok(())
}

fn agg_divisor(params: &TowerParams, g: &AggParams) -> Divisor {
    Divisor::aggregate(params, g.r, g.s, g.t, g.u)
}

fn xyz(p: [i64; 3]) -> Vec<i64> {
    p.to_vec()
}

/// Basis `x_1^i w^j v^k` of `L(rQ + sS0 + tS1 + uP)`.
pub fn basis_agg(params: &TowerParams, g: &AggParams) -> Result<MonomialBasis> {
    require_effective(g)?;
    Ok(MonomialBasis {
        variant: BasisVariant::Xwv,
        q: params.q(),
        g: agg_divisor(params, g),
        exponents: omega_enumerate(params, g)?
            .into_iter()
            .map(|p| xyz([p.i, p.j, p.k]))
            .collect(),
    })
}

/// Basis `x_1^i x_2^j x_3^k` of `L(rQ + sS0 + tS1 + uP)`.
pub fn basis_prime(params: &TowerParams, g: &AggParams) -> Result<MonomialBasis> {
    require_effective(g)?;
    Ok(MonomialBasis {
        variant: BasisVariant::X1X2X3,
        q: params.q(),
        g: agg_divisor(params, g),
        exponents: omega_prime_enumerate(params, g)?
            .into_iter()
            .map(|p| xyz([p.i, p.j, p.k]))
            .collect(),
    })
}

/// Basis of `L(G)` for a general divisor on the `2q` places.
pub fn basis_multi(params: &TowerParams, g: &MultiParams) -> Result<MonomialBasis> {
    g.check(params)?;
    if !g.is_effective() {
        let value = std::iter::once(g.r)
            .chain(g.s.iter().copied())
            .chain(g.t.iter().copied())
            .chain(std::iter::once(g.u))
            .find(|&c| c < 0)
            .unwrap_or_default();
        return Err(Error::NegativeCoefficient { name: "G", value });
    }
    Ok(MonomialBasis {
        variant: BasisVariant::Multi,
        q: params.q(),
        g: multi_to_divisor(params, g)?,
        exponents: omega_multi_enumerate(params, g)?.iter().map(|p| p.flat()).collect(),
    })
}

pub fn multi_to_divisor(params: &TowerParams, g: &MultiParams) -> Result<Divisor> {
    Divisor::new(params, g.r, g.s.clone(), g.t.clone(), g.u)
}

pub fn divisor_to_multi(params: &TowerParams, d: &Divisor) -> Result<MultiParams> {
    d.check(params)?;
    Ok(MultiParams {
        r: d.q_coeff,
        s: d.s0.clone(),
        t: d.s1.clone(),
        u: d.p,
    })
}

/// `l(D)` for `D >= 0`, or `D` with a single coefficient `-1`.
///
/// The `-1` case extends the proven statement: the valuation filtering that
/// justifies a negative `Q` coefficient carries over to the other places by
/// the permutation symmetry of the lattice sets. It is cross-checked against
/// characterizations that need no negative coefficients.
pub fn dim(params: &TowerParams, d: &Divisor) -> Result<i64> {
    let g = divisor_to_multi(params, d)?;
    let coeffs: Vec<i64> = d.coeffs().collect();
    let minus_ones = coeffs.iter().filter(|&&c| c == -1).count();
    if coeffs.iter().any(|&c| c < -1) || minus_ones > 1 {
        return Err(Error::UnsupportedDivisor(format!(
            "at most one coefficient may be -1 and none below, got {coeffs:?}"
        )));
    }
    omega_multi_count(params, &g)
}

/// A reduced representative of the class of `rQ + sS0 + tS1 + uP` and the
/// function realizing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub reduction: ReductionResult,
    /// Exponents of `f = x_1^i w^j v^k` with `G + Div(f)` the reduced divisor.
    pub witness: LatticePoint3,
}

/// `G ~ r'Q + t'S1 + u'P`, checked by adding the witness divisor.
pub fn equivalent_divisor(params: &TowerParams, g: &AggParams) -> Result<Equivalence> {
    let reduction = reduce_aggregate(params, g)?;
    let witness = reduction.witness(params, g.s)?;
    let f = monomial_divisor_xwv(params, witness.i, witness.j, witness.k)?;
    let lhs = agg_divisor(params, g).add(&f)?;
    let rhs = agg_divisor(params, &reduction.params());
    if lhs != rhs {
        return Err(Error::Precondition(format!(
            "witness does not realize the reduction of {g:?}"
        )));
    }
    Ok(Equivalence { reduction, witness })
}
