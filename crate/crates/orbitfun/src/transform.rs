//! Discrete inner products on F_M and F̃_M, orthogonality verification,
//! forward C/S-transforms and interpolation.
//!
//! The decomposition matrix D of values Φ_λ(x) (resp. φ_λ(x)) is cached in a
//! [`TransformPlan`] once per (algebra, M, kind) and reused across sample
//! sets; building it and the Gram/transform loops are data-parallel over λ.

use std::fmt;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::grids::{enumerate_f, enumerate_lambda, GridPoint, WeightPoint};
use crate::orbitfn::{
    eval_c_grid_with, eval_c_real_with, eval_s_grid_with, eval_s_real_with, weight_orbit,
    RealPoint, RootsOfUnity,
};
use crate::par::map_indexed;
use crate::weyl::{epsilon, stabilizer_order_lambda};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    C,
    S,
}

impl TransformKind {
    pub fn name(self) -> &'static str {
        match self {
            TransformKind::C => "C",
            TransformKind::S => "S",
        }
    }

    pub fn from_name(s: &str) -> Option<TransformKind> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C" => Some(TransformKind::C),
            "S" => Some(TransformKind::S),
            _ => None,
        }
    }

    /// S-kind objects live on the interior grid / interior weight set.
    pub fn interior(self) -> bool {
        matches!(self, TransformKind::S)
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Function values on F_M (kind C) or F̃_M (kind S), stored in the canonical
/// descending enumeration order of the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    m: u64,
    kind: TransformKind,
    values: Vec<Complex64>,
}

impl SampleSet {
    pub fn new(
        data: &AlgebraData,
        m: u64,
        kind: TransformKind,
        values: Vec<Complex64>,
    ) -> Result<SampleSet> {
        let expected = enumerate_f(data, m, kind.interior()).len();
        if values.len() != expected {
            return Err(Error::IncompleteSampleSet(format!(
                "sample set for {} grid of {} at M = {m} needs {expected} values, got {}",
                kind,
                data.lie_type(),
                values.len()
            )));
        }
        Ok(SampleSet { m, kind, values })
    }

    pub fn from_fn(
        data: &AlgebraData,
        m: u64,
        kind: TransformKind,
        mut f: impl FnMut(&GridPoint) -> Complex64,
    ) -> SampleSet {
        let values = enumerate_f(data, m, kind.interior())
            .iter()
            .map(&mut f)
            .collect();
        SampleSet { m, kind, values }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Expansion coefficients indexed by Λ_M (kind C) or Λ̃_M (kind S), in the
/// canonical descending enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    m: u64,
    kind: TransformKind,
    coeffs: Vec<Complex64>,
}

impl CoefficientSet {
    pub fn new(
        data: &AlgebraData,
        m: u64,
        kind: TransformKind,
        coeffs: Vec<Complex64>,
    ) -> Result<CoefficientSet> {
        let expected = enumerate_lambda(data, m, kind.interior()).len();
        if coeffs.len() != expected {
            return Err(Error::IncompleteSampleSet(format!(
                "coefficient set of kind {} for {} at M = {m} needs {expected} entries, got {}",
                kind,
                data.lie_type(),
                coeffs.len()
            )));
        }
        Ok(CoefficientSet { m, kind, coeffs })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }
}

fn check_pair(f: &SampleSet, g: &SampleSet, kind: TransformKind) -> Result<()> {
    if f.kind != kind || g.kind != kind {
        return Err(Error::MismatchedKind {
            expected: kind.name(),
            got: if f.kind != kind {
                f.kind.name()
            } else {
                g.kind.name()
            },
        });
    }
    if f.m != g.m {
        return Err(Error::MismatchedM {
            expected: f.m,
            got: g.m,
        });
    }
    Ok(())
}

/// ⟨f,g⟩_{F_M} = Σ_{x∈F_M} ε(x)·f(x)·conj(g(x)).
pub fn inner_c(data: &AlgebraData, f: &SampleSet, g: &SampleSet) -> Result<Complex64> {
    check_pair(f, g, TransformKind::C)?;
    let grid = enumerate_f(data, f.m, false);
    Ok(grid
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .map(|(x, (&fv, &gv))| {
            let eps = epsilon(data, x).to_f64().expect("epsilon fits f64");
            fv * gv.conj() * eps
        })
        .sum())
}

/// ⟨f,g⟩_{F̃_M} = |W|·Σ_{x∈F̃_M} f(x)·conj(g(x)).
pub fn inner_s(data: &AlgebraData, f: &SampleSet, g: &SampleSet) -> Result<Complex64> {
    check_pair(f, g, TransformKind::S)?;
    let w = data.weyl_order().to_f64().expect("|W| fits f64");
    Ok(f.values
        .iter()
        .zip(&g.values)
        .map(|(&fv, &gv)| fv * gv.conj())
        .sum::<Complex64>()
        * w)
}

/// Cached evaluation matrix for one (algebra, M, kind), reusable across many
/// sample sets.
pub struct TransformPlan<'a> {
    data: &'a AlgebraData,
    kind: TransformKind,
    m: u64,
    grid: Vec<GridPoint>,
    weights: Vec<WeightPoint>,
    eps: Vec<f64>,
    rows: Vec<Vec<Complex64>>,
    transform_norm: Vec<f64>,
    gram_diag: Vec<f64>,
}

impl<'a> TransformPlan<'a> {
    pub fn new(
        data: &'a AlgebraData,
        m: u64,
        kind: TransformKind,
        cap: u64,
    ) -> Result<TransformPlan<'a>> {
        let interior = kind.interior();
        let grid = enumerate_f(data, m, interior);
        let weights = enumerate_lambda(data, m, interior);
        debug_assert_eq!(grid.len(), weights.len());
        if !grid.is_empty() {
            // surfaces the cap refusal before spawning the row builds
            weight_orbit(data, weights[0].weight_coords(), cap)?;
        }
        let eps: Vec<f64> = grid
            .iter()
            .map(|x| epsilon(data, x).to_f64().expect("epsilon fits f64"))
            .collect();
        let roots = RootsOfUnity::new(data.center_order() * m);
        let rows: Vec<Vec<Complex64>> = map_indexed(weights.len(), |li| {
            let orb = weight_orbit(data, weights[li].weight_coords(), cap)
                .expect("cap already checked");
            grid.iter()
                .map(|x| match kind {
                    TransformKind::C => eval_c_grid_with(data, &orb, &roots, x),
                    TransformKind::S => eval_s_grid_with(data, &orb, &roots, x),
                })
                .collect()
        });
        let c = BigUint::from(data.center_order());
        let mn = BigUint::from(m).pow(data.rank() as u32);
        let cwmn = (&c * data.weyl_order() * &mn)
            .to_f64()
            .expect("c|W|M^n fits f64");
        let (transform_norm, gram_diag) = match kind {
            TransformKind::C => {
                let diag: Vec<f64> = weights
                    .iter()
                    .map(|w| {
                        let h = stabilizer_order_lambda(data, w).order;
                        cwmn * h.to_f64().expect("h fits f64")
                    })
                    .collect();
                (diag.clone(), diag)
            }
            TransformKind::S => {
                let cmn = (&c * &mn).to_f64().expect("cM^n fits f64");
                (vec![cmn; weights.len()], vec![cwmn; weights.len()])
            }
        };
        Ok(TransformPlan {
            data,
            kind,
            m,
            grid,
            weights,
            eps,
            rows,
            transform_norm,
            gram_diag,
        })
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn grid(&self) -> &[GridPoint] {
        &self.grid
    }

    pub fn weights(&self) -> &[WeightPoint] {
        &self.weights
    }

    /// Row of the decomposition matrix: the values of Φ_λ (resp. φ_λ) on the
    /// grid, λ = weights()[i].
    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.rows[i]
    }

    /// Forward discrete transform of a complete sample set.
    pub fn forward(&self, f: &SampleSet) -> Result<CoefficientSet> {
        if f.kind != self.kind {
            return Err(Error::MismatchedKind {
                expected: self.kind.name(),
                got: f.kind.name(),
            });
        }
        if f.m != self.m {
            return Err(Error::MismatchedM {
                expected: self.m,
                got: f.m,
            });
        }
        let coeffs = map_indexed(self.weights.len(), |li| {
            let row = &self.rows[li];
            let mut acc = Complex64::zero();
            match self.kind {
                TransformKind::C => {
                    for (xi, &fv) in f.values.iter().enumerate() {
                        acc += fv * row[xi].conj() * self.eps[xi];
                    }
                }
                TransformKind::S => {
                    for (xi, &fv) in f.values.iter().enumerate() {
                        acc += fv * row[xi].conj();
                    }
                }
            }
            acc / self.transform_norm[li]
        });
        Ok(CoefficientSet {
            m: self.m,
            kind: self.kind,
            coeffs,
        })
    }

    /// Σ_λ c_λ·Φ_λ(x) (resp. φ) on the grid points; the inverse of
    /// [`TransformPlan::forward`].
    pub fn evaluate_on_grid(&self, coeffs: &CoefficientSet) -> Result<SampleSet> {
        if coeffs.kind != self.kind || coeffs.m != self.m {
            return Err(Error::MismatchedKind {
                expected: self.kind.name(),
                got: coeffs.kind.name(),
            });
        }
        let values = map_indexed(self.grid.len(), |xi| {
            coeffs
                .coeffs
                .iter()
                .enumerate()
                .map(|(li, &cl)| cl * self.rows[li][xi])
                .sum()
        });
        Ok(SampleSet {
            m: self.m,
            kind: self.kind,
            values,
        })
    }

    /// Full Gram matrix scan of the expansion functions on the weighted grid.
    pub fn gram_report(&self, tolerance: f64) -> OrthogonalityReport {
        let c = BigUint::from(self.data.center_order());
        let mn = BigUint::from(self.m).pow(self.data.rank() as u32);
        let cwmn = (&c * self.data.weyl_order() * &mn)
            .to_f64()
            .expect("c|W|M^n fits f64");
        let w_order = self.data.weyl_order().to_f64().expect("|W| fits f64");
        let per_row: Vec<(f64, f64)> = map_indexed(self.weights.len(), |i| {
            let mut max_off: f64 = 0.0;
            let mut diag_err: f64 = 0.0;
            for j in 0..self.weights.len() {
                let mut acc = Complex64::zero();
                for xi in 0..self.grid.len() {
                    let w = match self.kind {
                        TransformKind::C => self.eps[xi],
                        TransformKind::S => w_order,
                    };
                    acc += self.rows[i][xi] * self.rows[j][xi].conj() * w;
                }
                if i == j {
                    diag_err = (acc.re - self.gram_diag[i]).abs() / self.gram_diag[i]
                        + acc.im.abs() / self.gram_diag[i];
                } else {
                    max_off = max_off.max(acc.norm() / cwmn);
                }
            }
            (max_off, diag_err)
        });
        let max_offdiag = per_row.iter().map(|p| p.0).fold(0.0, f64::max);
        let max_diag_rel_err = per_row.iter().map(|p| p.1).fold(0.0, f64::max);
        OrthogonalityReport {
            kind: self.kind,
            m: self.m,
            size: self.weights.len(),
            max_offdiag,
            max_diag_rel_err,
            tolerance,
            passed: max_offdiag <= tolerance && max_diag_rel_err <= tolerance,
        }
    }
}

/// Result of a discrete-orthogonality scan: the largest off-diagonal Gram
/// entry (normalized by c|W|Mⁿ) and the largest diagonal relative error
/// against c|W|Mⁿh^∨_λ (C) or c|W|Mⁿ (S).
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    pub kind: TransformKind,
    pub m: u64,
    pub size: usize,
    pub max_offdiag: f64,
    pub max_diag_rel_err: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl fmt::Display for OrthogonalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-orthogonality M={} size={} max_offdiag={:e} max_diag_rel_err={:e} tol={:e} {}",
            self.kind,
            self.m,
            self.size,
            self.max_offdiag,
            self.max_diag_rel_err,
            self.tolerance,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

/// Discrete C-transform: coefficients of f over {Φ_λ : λ ∈ Λ_M}.
pub fn ctransform(data: &AlgebraData, f: &SampleSet, cap: u64) -> Result<CoefficientSet> {
    if f.kind != TransformKind::C {
        return Err(Error::MismatchedKind {
            expected: "C",
            got: f.kind.name(),
        });
    }
    TransformPlan::new(data, f.m, TransformKind::C, cap)?.forward(f)
}

/// Discrete S-transform: coefficients of f over {φ_λ : λ ∈ Λ̃_M}. For
/// M below the Coxeter number the grid is empty and so is the result.
pub fn stransform(data: &AlgebraData, f: &SampleSet, cap: u64) -> Result<CoefficientSet> {
    if f.kind != TransformKind::S {
        return Err(Error::MismatchedKind {
            expected: "S",
            got: f.kind.name(),
        });
    }
    TransformPlan::new(data, f.m, TransformKind::S, cap)?.forward(f)
}

/// Interpolating function Φ^M (kind C) or φ^M (kind S) at arbitrary real
/// points. Orbits are prepared once per λ and shared across points.
pub fn interpolate_many(
    data: &AlgebraData,
    coeffs: &CoefficientSet,
    points: &[RealPoint],
    cap: u64,
) -> Result<Vec<Complex64>> {
    let weights = enumerate_lambda(data, coeffs.m, coeffs.kind.interior());
    let mut orbits = Vec::with_capacity(weights.len());
    for w in &weights {
        orbits.push(weight_orbit(data, w.weight_coords(), cap)?);
    }
    Ok(map_indexed(points.len(), |pi| {
        let y = points[pi].coords();
        orbits
            .iter()
            .zip(&coeffs.coeffs)
            .map(|(orb, &cl)| {
                let v = match coeffs.kind {
                    TransformKind::C => eval_c_real_with(data, orb, y),
                    TransformKind::S => eval_s_real_with(data, orb, y),
                };
                cl * v
            })
            .sum()
    }))
}

/// Φ^M(y) = Σ_λ c_λ·Φ_λ(y).
pub fn interpolate_c(
    data: &AlgebraData,
    coeffs: &CoefficientSet,
    y: &RealPoint,
    cap: u64,
) -> Result<Complex64> {
    if coeffs.kind != TransformKind::C {
        return Err(Error::MismatchedKind {
            expected: "C",
            got: coeffs.kind.name(),
        });
    }
    Ok(interpolate_many(data, coeffs, std::slice::from_ref(y), cap)?[0])
}

/// φ^M(y) = Σ_λ c̃_λ·φ_λ(y).
pub fn interpolate_s(
    data: &AlgebraData,
    coeffs: &CoefficientSet,
    y: &RealPoint,
    cap: u64,
) -> Result<Complex64> {
    if coeffs.kind != TransformKind::S {
        return Err(Error::MismatchedKind {
            expected: "S",
            got: coeffs.kind.name(),
        });
    }
    Ok(interpolate_many(data, coeffs, std::slice::from_ref(y), cap)?[0])
}

/// Runs the full Gram scan for one (algebra, M, kind) and reports against
/// `tolerance`. An empty S grid (M below the Coxeter number) passes
/// vacuously.
pub fn verify_orthogonality(
    data: &AlgebraData,
    m: u64,
    kind: TransformKind,
    tolerance: f64,
    cap: u64,
) -> Result<OrthogonalityReport> {
    Ok(TransformPlan::new(data, m, kind, cap)?.gram_report(tolerance))
}
