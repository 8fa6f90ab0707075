//! The grids F_M and Λ_M: enumeration, exact counting, gcd stratification and
//! the residue-class matrices R.
//!
//! Points of F_M are barycentric integer tuples [s_0, ..., s_n] with
//! s_0 + Σ m_i s_i = M; points of Λ_M satisfy the same relation with the dual
//! marks. Counting uses closed binomial forms for the classical series and
//! the matrices R for E, F, G; enumeration is the independent slow path.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::Zero;

use crate::algebra::{AlgebraData, Series};
use crate::error::{Error, Result};
use crate::rtables;

/// A point of F_M in barycentric coordinates [s_0, ..., s_n].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    m: u64,
    s: Vec<u64>,
}

/// A dominant weight of Λ_M in barycentric coordinates [t_0, ..., t_n].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightPoint {
    m: u64,
    t: Vec<u64>,
}

impl GridPoint {
    pub fn new(data: &AlgebraData, m: u64, s: Vec<u64>) -> Result<GridPoint> {
        validate_coords("grid point", data.marks(), m, &s)?;
        Ok(GridPoint { m, s })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Full coordinate tuple including s_0.
    pub fn coords(&self) -> &[u64] {
        &self.s
    }

    /// Coordinates s_1..s_n, i.e. the ω^∨-basis numerators of M·x.
    pub fn interior_coords(&self) -> &[u64] {
        &self.s[1..]
    }

    pub fn is_interior(&self) -> bool {
        self.s.iter().all(|&v| v > 0)
    }
}

impl WeightPoint {
    pub fn new(data: &AlgebraData, m: u64, t: Vec<u64>) -> Result<WeightPoint> {
        validate_coords("weight point", data.dual_marks(), m, &t)?;
        Ok(WeightPoint { m, t })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn coords(&self) -> &[u64] {
        &self.t
    }

    /// Coordinates t_1..t_n, i.e. the ω-basis coordinates of λ.
    pub fn weight_coords(&self) -> &[u64] {
        &self.t[1..]
    }

    pub fn is_interior(&self) -> bool {
        self.t.iter().all(|&v| v > 0)
    }
}

fn validate_coords(what: &'static str, weights: &[u64], m: u64, coords: &[u64]) -> Result<()> {
    let n = weights.len();
    let as_i64 = || coords.iter().map(|&v| v as i64).collect();
    if coords.len() != n + 1 {
        return Err(Error::InvalidPoint {
            what,
            coords: as_i64(),
            m,
            reason: format!("expected {} coordinates, got {}", n + 1, coords.len()),
        });
    }
    let sum = coords[0]
        + coords[1..]
            .iter()
            .zip(weights)
            .map(|(&c, &w)| c * w)
            .sum::<u64>();
    if sum != m {
        return Err(Error::InvalidPoint {
            what,
            coords: as_i64(),
            m,
            reason: format!("weighted coordinate sum is {sum}, expected M = {m}"),
        });
    }
    Ok(())
}

/// All nonnegative solutions of x_0 + Σ w_i x_i = target, sorted
/// lexicographically descending. `min` is 0 for the full grid, 1 for the
/// interior.
fn enumerate_solutions(weights: &[u64], target: u64, min: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; weights.len() + 1];
    fn recurse(
        weights: &[u64],
        idx: usize,
        remaining: i64,
        min: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if idx == weights.len() {
            if remaining >= min as i64 {
                cur[0] = remaining as u64;
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[idx] as i64;
        let mut v = min as i64;
        while remaining - v * w >= min as i64 {
            cur[idx + 1] = v as u64;
            recurse(weights, idx + 1, remaining - v * w, min, cur, out);
            v += 1;
        }
    }
    recurse(weights, 0, target as i64, min, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Points of F_M (or of its interior), sorted lexicographically descending.
pub fn enumerate_f(data: &AlgebraData, m: u64, interior_only: bool) -> Vec<GridPoint> {
    enumerate_solutions(data.marks(), m, interior_only as u64)
        .into_iter()
        .map(|s| GridPoint { m, s })
        .collect()
}

/// Dominant weights of Λ_M (or of its interior), sorted descending.
pub fn enumerate_lambda(data: &AlgebraData, m: u64, interior_only: bool) -> Vec<WeightPoint> {
    enumerate_solutions(data.dual_marks(), m, interior_only as u64)
        .into_iter()
        .map(|t| WeightPoint { m, t })
        .collect()
}

fn binom_u64(top: i64, k: u64) -> BigUint {
    if top < k as i64 {
        return BigUint::zero();
    }
    binomial(BigUint::from(top as u64), BigUint::from(k))
}

/// |F_M| by closed form: binomial expressions for the classical series,
/// |F_{Lk+l}| = Σ_i R_li·binom(n−i+k, n) for the exceptional ones.
pub fn count_f(data: &AlgebraData, m: u64) -> BigUint {
    let n = data.rank() as i64;
    let k = (m / 2) as i64;
    match data.lie_type().series() {
        Series::A => binom_u64(n + m as i64, n as u64),
        Series::B | Series::C => {
            if m % 2 == 0 {
                binom_u64(n + k, n as u64) + binom_u64(n + k - 1, n as u64)
            } else {
                BigUint::from(2u32) * binom_u64(n + k, n as u64)
            }
        }
        Series::D => {
            if m % 2 == 0 {
                binom_u64(n + k, n as u64)
                    + BigUint::from(6u32) * binom_u64(n + k - 1, n as u64)
                    + binom_u64(n + k - 2, n as u64)
            } else {
                BigUint::from(4u32) * (binom_u64(n + k, n as u64) + binom_u64(n + k - 1, n as u64))
            }
        }
        Series::E | Series::F | Series::G => {
            let big_l = data.big_l();
            let kk = (m / big_l) as i64;
            let l = (m % big_l) as usize;
            let row = stored_r(data).rows[l].clone();
            row.iter()
                .enumerate()
                .map(|(i, d)| d * binom_u64(n - i as i64 + kk, n as u64))
                .sum()
        }
    }
}

/// |Λ_M|; equals |F_M| because the dual marks permute the marks.
pub fn count_lambda(data: &AlgebraData, m: u64) -> BigUint {
    count_f(data, m)
}

/// |F̃_M|: 0 below the Coxeter number, 1 at it, |F_{M−m}| above it.
pub fn count_f_interior(data: &AlgebraData, m: u64) -> BigUint {
    let cox = data.coxeter();
    match m.cmp(&cox) {
        std::cmp::Ordering::Less => BigUint::zero(),
        std::cmp::Ordering::Equal => BigUint::from(1u32),
        std::cmp::Ordering::Greater => count_f(data, m - cox),
    }
}

/// The matrix R = (d_li), l in 0..L, i in 0..=N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    pub rows: Vec<Vec<BigUint>>,
}

/// The stored appendix table for the algebra's family.
pub fn stored_r(data: &AlgebraData) -> RMatrix {
    let table: &[&[u64]] = match (data.lie_type().series(), data.rank()) {
        (Series::A, _) => &rtables::R_A,
        (Series::B, _) => &rtables::R_B,
        (Series::C, _) => &rtables::R_C,
        (Series::D, _) => &rtables::R_D,
        (Series::E, 6) => &rtables::R_E6,
        (Series::E, 7) => &rtables::R_E7,
        (Series::E, _) => &rtables::R_E8,
        (Series::F, _) => &rtables::R_F4,
        (Series::G, _) => &rtables::R_G2,
    };
    RMatrix {
        rows: table
            .iter()
            .map(|row| row.iter().map(|&v| BigUint::from(v)).collect())
            .collect(),
    }
}

/// Regenerates R from its definition: d_li counts the solutions of
/// l_0 + Σ m_j l_j = Li + l with l_0 < L and l_j < L/m_j. Computed as the
/// coefficient array of the product of the box generating polynomials, which
/// keeps E8 at a few hundred thousand operations instead of the 10^10-point
/// raw box walk.
pub fn generate_r(data: &AlgebraData) -> RMatrix {
    let big_l = data.big_l();
    let big_n = data.big_n();
    let mut poly: Vec<BigUint> = vec![BigUint::from(1u32); big_l as usize];
    for &mark in data.marks() {
        let reps = (big_l / mark) as usize;
        let step = mark as usize;
        let factor_deg = (reps - 1) * step;
        let mut next = vec![BigUint::zero(); poly.len() + factor_deg];
        for (a, va) in poly.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for r in 0..reps {
                next[a + r * step] += va;
            }
        }
        poly = next;
    }
    let rows = (0..big_l as usize)
        .map(|l| {
            (0..=big_n as usize)
                .map(|i| {
                    poly.get(big_l as usize * i + l)
                        .cloned()
                        .unwrap_or_else(BigUint::zero)
                })
                .collect()
        })
        .collect();
    RMatrix { rows }
}

/// Counts of F_{M,K} = {points with gcd(s_0, ..., s_n) = K}, keyed by the
/// divisors K of M.
pub fn stratify_gcd(data: &AlgebraData, m: u64) -> BTreeMap<u64, BigUint> {
    let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
    for k in divisors(m) {
        counts.insert(k, BigUint::zero());
    }
    for p in enumerate_f(data, m, false) {
        let g = p.coords().iter().fold(0u64, |acc, &v| acc.gcd(&v));
        *counts.get_mut(&g).expect("gcd divides M") += 1u32;
    }
    counts
}

fn divisors(m: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=m).filter(|k| m % k == 0).collect();
    d.sort_unstable();
    d
}

/// Number of conjugacy classes of elements whose order divides M: the points
/// of F_M lying on the refined coroot lattice (1/M)Q^∨, i.e. those whose
/// coordinate vector (s_1, ..., s_n) is an integer combination of the Cartan
/// columns. For the centerless types G2, F4, E8 this equals |F_M|.
pub fn nu(data: &AlgebraData, m: u64) -> BigUint {
    let c = data.center_order();
    let pn = data.pairing_num();
    let n = data.rank();
    let mut count = BigUint::zero();
    'points: for p in enumerate_f(data, m, false) {
        let s = p.interior_coords();
        for row in pn.iter().take(n) {
            let dot: i128 = row
                .iter()
                .zip(s)
                .map(|(&a, &b)| a as i128 * b as i128)
                .sum();
            if dot.rem_euclid(c as i128) != 0 {
                continue 'points;
            }
        }
        count += 1u32;
    }
    count
}
