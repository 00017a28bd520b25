//! Exact rational vertex weights.
//!
//! A weight function is stored as integer masses over a common
//! denominator: `w(v) = mass[v] / denom` with `Σ mass = denom`. Every
//! comparison against a rational threshold is done by cross-multiplication
//! with overflow checks.

use std::fmt;
use std::str::FromStr;

use num::integer::Integer;
use num::rational::Ratio;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};
use crate::vset::VertexSet;

/// Rational threshold such as the balance constant `c`.
pub type Fraction = Ratio<u64>;

/// `1/2`.
pub fn half() -> Fraction {
    Fraction::new(1, 2)
}

/// An exact weight of a vertex set, `mass / denom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub mass: u128,
    pub denom: u128,
}

impl Weight {
    pub fn to_ratio(self) -> Ratio<u128> {
        Ratio::new(self.mass, self.denom)
    }

    /// `self <= c`, exactly.
    pub fn at_most(self, c: Fraction) -> Result<bool> {
        let lhs = self.mass.checked_mul(u128::from(*c.denom())).ok_or(Error::WeightOverflow)?;
        let rhs = self.denom.checked_mul(u128::from(*c.numer())).ok_or(Error::WeightOverflow)?;
        Ok(lhs <= rhs)
    }

    /// `self > 1/2`, exactly.
    pub fn exceeds_half(self) -> bool {
        // mass and denom are at most u128::MAX / 2 by construction
        2 * self.mass > self.denom
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_ratio();
        if *r.denom() == 1 {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Largest admissible denominator; leaves headroom for doubling and for
/// multiplication by 64-bit threshold parts.
const MAX_DENOM: u128 = 1 << 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    mass: Vec<u128>,
    denom: u128,
}

impl WeightFunction {
    /// Normalises nonnegative integer masses; all-zero masses are rejected.
    pub fn from_masses(mass: Vec<u128>) -> Result<Self> {
        let mut total: u128 = 0;
        for &m in &mass {
            total = total.checked_add(m).ok_or(Error::WeightOverflow)?;
        }
        if total == 0 {
            return Err(Error::InvalidWeights("total mass is zero".into()));
        }
        if total > MAX_DENOM {
            return Err(Error::WeightOverflow);
        }
        Ok(WeightFunction { mass, denom: total })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::from_masses(vec![1; n])
    }

    /// All weight on `v`.
    pub fn point(n: usize, v: usize) -> Result<Self> {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut mass = vec![0; n];
        mass[v] = 1;
        Self::from_masses(mass)
    }

    /// Exact conversion from rationals that must be nonnegative and sum to 1.
    pub fn from_rationals(values: &[BigRational]) -> Result<Self> {
        let mut total = BigRational::zero();
        let mut lcm = BigInt::one();
        for (v, r) in values.iter().enumerate() {
            if r < &BigRational::zero() {
                return Err(Error::InvalidWeights(format!("weight of vertex {v} is negative")));
            }
            total += r;
            lcm = lcm.lcm(r.denom());
        }
        if total != BigRational::one() {
            return Err(Error::InvalidWeights(format!("weights sum to {total}, not 1")));
        }
        let denom = lcm.to_u128().filter(|&d| d <= MAX_DENOM).ok_or(Error::WeightOverflow)?;
        let mass = values
            .iter()
            .map(|r| {
                (r.numer() * (&lcm / r.denom()))
                    .to_u128()
                    .ok_or(Error::WeightOverflow)
            })
            .collect::<Result<Vec<_>>>()?;
        let w = WeightFunction { mass, denom };
        debug_assert_eq!(w.mass.iter().sum::<u128>(), w.denom);
        Ok(w)
    }

    /// Independent masses in `0..=2^16`; falls back to uniform if every draw
    /// is zero.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Result<Self> {
        let mass: Vec<u128> = (0..n).map(|_| rng.random_range(0..=1u128 << 16)).collect();
        if mass.iter().all(|&m| m == 0) {
            return Self::uniform(n);
        }
        Self::from_masses(mass)
    }

    /// Parses lines `<vertex> <numerator>/<denominator>` (or an integer);
    /// blank lines and `#` comments are ignored and missing vertices weigh 0.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut values = vec![BigRational::zero(); n];
        let mut seen = vec![false; n];
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let content = line.split('#').next().unwrap_or("").trim();
            if !content.is_empty() {
                let mut parts = content.split_whitespace();
                let v_text = parts.next().unwrap_or("");
                let r_text = parts
                    .next()
                    .ok_or_else(|| parse_err(offset, format!("missing weight in `{content}`")))?;
                if parts.next().is_some() {
                    return Err(parse_err(offset, format!("trailing tokens in `{content}`")));
                }
                let v: usize = v_text
                    .parse()
                    .map_err(|_| parse_err(offset, format!("bad vertex id `{v_text}`")))?;
                if v >= n {
                    return Err(parse_err(offset, format!("vertex {v} out of range for n={n}")));
                }
                if seen[v] {
                    return Err(parse_err(offset, format!("vertex {v} listed twice")));
                }
                let r = BigRational::from_str(r_text)
                    .map_err(|_| parse_err(offset, format!("bad rational `{r_text}`")))?;
                seen[v] = true;
                values[v] = r;
            }
            offset += line.len();
        }
        Self::from_rationals(&values)
    }

    /// One `<vertex> <weight>` line per vertex of nonzero weight.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n() {
            if self.mass[v] > 0 {
                out.push_str(&format!("{v} {}\n", self.of_vertex(v)));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.mass.len()
    }

    pub fn denom(&self) -> u128 {
        self.denom
    }

    pub fn mass(&self, v: usize) -> u128 {
        self.mass[v]
    }

    pub fn masses(&self) -> &[u128] {
        &self.mass
    }

    pub fn mass_of(&self, x: VertexSet) -> u128 {
        x.iter().map(|v| self.mass[v]).sum()
    }

    pub fn of_vertex(&self, v: usize) -> Weight {
        Weight { mass: self.mass[v], denom: self.denom }
    }

    /// `w(X)`.
    pub fn of(&self, x: VertexSet) -> Weight {
        Weight { mass: self.mass_of(x), denom: self.denom }
    }

    pub fn support(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.mass[v] > 0).collect()
    }

    /// The weight function of `G[x]` (vertices renumbered in ascending
    /// order) proportional to `w` on `x`; uniform when `w(x) = 0`.
    pub fn restricted(&self, x: VertexSet) -> Result<Self> {
        let mass: Vec<u128> = x.iter().map(|v| self.mass[v]).collect();
        if mass.iter().all(|&m| m == 0) {
            return Self::uniform(mass.len());
        }
        Self::from_masses(mass)
    }

    /// Builds a weight function over `n` vertices from explicit masses that
    /// must sum to `denom`; used for inherited weights that share `w`'s
    /// denominator.
    pub(crate) fn with_denominator(mass: Vec<u128>, denom: u128) -> Result<Self> {
        let total: u128 = mass.iter().sum();
        if total != denom {
            return Err(Error::InvalidWeights(format!("masses sum to {total}, expected {denom}")));
        }
        Ok(WeightFunction { mass, denom })
    }

    /// The same masses read through `map` (new id `i` ↦ old id `map[i]`),
    /// without renormalising.
    pub fn pulled_back(&self, map: &[usize]) -> Result<Self> {
        let mass: Vec<u128> = map.iter().map(|&v| self.mass[v]).collect();
        let total: u128 = mass.iter().sum();
        if total != self.denom {
            return Err(Error::InvalidWeights("mapping drops weighted vertices".into()));
        }
        Ok(WeightFunction { mass, denom: self.denom })
    }

    pub fn total(&self) -> Weight {
        Weight { mass: self.mass.iter().sum(), denom: self.denom }
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n()).map(|v| self.of_vertex(v).to_string())).finish()
    }
}

impl Serialize for WeightFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq((0..self.n()).map(|v| self.of_vertex(v)))
    }
}
