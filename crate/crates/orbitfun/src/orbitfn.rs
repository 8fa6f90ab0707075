//! Evaluation of the orbit functions Φ_λ (symmetric) and φ_λ (antisymmetric).
//!
//! On grid points the phase ⟨λ, x⟩ is an exact integer multiple of 1/(cM),
//! so values are sums of table entries of the cM-th roots of unity and carry
//! no phase drift; at arbitrary real points standard double precision is
//! used. Both paths sum over the Weyl orbit of λ instead of over all of W,
//! scaled by the orbit-stabilizer multiplier |W|/|Wλ|.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::grids::{GridPoint, WeightPoint};
use crate::weyl::{orbit, CoordBasis, OrbitElement};

/// A point of ℝⁿ in ω^∨ coordinates; grid points embed as y_i = s_i/M.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoint {
    y: Vec<f64>,
}

impl RealPoint {
    pub fn new(data: &AlgebraData, y: Vec<f64>) -> Result<RealPoint> {
        if y.len() != data.rank() {
            return Err(Error::Format(format!(
                "real point needs {} coordinates, got {}",
                data.rank(),
                y.len()
            )));
        }
        Ok(RealPoint { y })
    }

    pub fn coords(&self) -> &[f64] {
        &self.y
    }

    pub fn from_grid(p: &GridPoint) -> RealPoint {
        RealPoint {
            y: p.interior_coords()
                .iter()
                .map(|&s| s as f64 / p.m() as f64)
                .collect(),
        }
    }
}

/// Precomputed table of the `order`-th roots of unity.
pub(crate) struct RootsOfUnity {
    order: u64,
    table: Vec<Complex64>,
}

impl RootsOfUnity {
    pub(crate) fn new(order: u64) -> RootsOfUnity {
        let table = (0..order)
            .map(|k| {
                let (sin, cos) = (2.0 * std::f64::consts::PI * k as f64 / order as f64).sin_cos();
                Complex64::new(cos, sin)
            })
            .collect();
        RootsOfUnity { order, table }
    }

    pub(crate) fn get(&self, num: i128) -> Complex64 {
        self.table[num.rem_euclid(self.order as i128) as usize]
    }
}

/// Weyl orbit of a dominant weight, with the multiplier making
/// Σ_{w∈W} = multiplier · Σ_{μ∈Wλ}.
pub(crate) struct WeightOrbit {
    pub elements: Vec<OrbitElement>,
    pub multiplier: f64,
}

pub(crate) fn weight_orbit(data: &AlgebraData, t: &[u64], cap: u64) -> Result<WeightOrbit> {
    let seed: Vec<i64> = t.iter().map(|&v| v as i64).collect();
    let elements = orbit(data, &seed, CoordBasis::Weight, cap)?;
    let multiplier = (data.weyl_order() / elements.len())
        .to_f64()
        .expect("orbit multiplier fits f64");
    Ok(WeightOrbit {
        elements,
        multiplier,
    })
}

/// Phase numerator ⟨μ, x⟩·cM = μᵀ·(cC⁻¹)·s for integer coordinates.
fn phase_numerator(data: &AlgebraData, mu: &[i64], s: &[u64]) -> i128 {
    let pn = data.pairing_num();
    let mut acc: i128 = 0;
    for (i, &mi) in mu.iter().enumerate() {
        if mi == 0 {
            continue;
        }
        let row = &pn[i];
        let mut dot: i128 = 0;
        for (j, &sj) in s.iter().enumerate() {
            dot += row[j] as i128 * sj as i128;
        }
        acc += mi as i128 * dot;
    }
    acc
}

fn check_same_m(lambda: &WeightPoint, x: &GridPoint) -> Result<()> {
    if lambda.m() != x.m() {
        return Err(Error::MismatchedM {
            expected: lambda.m(),
            got: x.m(),
        });
    }
    Ok(())
}

/// Φ_λ(x) on the grid, with exact integer phases.
pub fn eval_c_grid(
    data: &AlgebraData,
    lambda: &WeightPoint,
    x: &GridPoint,
    cap: u64,
) -> Result<Complex64> {
    check_same_m(lambda, x)?;
    let orb = weight_orbit(data, lambda.weight_coords(), cap)?;
    let roots = RootsOfUnity::new(data.center_order() * x.m());
    Ok(eval_c_grid_with(data, &orb, &roots, x))
}

pub(crate) fn eval_c_grid_with(
    data: &AlgebraData,
    orb: &WeightOrbit,
    roots: &RootsOfUnity,
    x: &GridPoint,
) -> Complex64 {
    let s = x.interior_coords();
    let sum: Complex64 = orb
        .elements
        .iter()
        .map(|e| roots.get(phase_numerator(data, &e.coords, s)))
        .sum();
    sum * orb.multiplier
}

/// φ_λ(x) on the grid. Boundary labels λ ∈ Λ_M \ Λ̃_M give the analytically
/// forced exact zero without touching the sign-tracked orbit machinery.
pub fn eval_s_grid(
    data: &AlgebraData,
    lambda: &WeightPoint,
    x: &GridPoint,
    cap: u64,
) -> Result<Complex64> {
    check_same_m(lambda, x)?;
    if !lambda.is_interior() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let orb = weight_orbit(data, lambda.weight_coords(), cap)?;
    let roots = RootsOfUnity::new(data.center_order() * x.m());
    Ok(eval_s_grid_with(data, &orb, &roots, x))
}

pub(crate) fn eval_s_grid_with(
    data: &AlgebraData,
    orb: &WeightOrbit,
    roots: &RootsOfUnity,
    x: &GridPoint,
) -> Complex64 {
    let s = x.interior_coords();
    let sum: Complex64 = orb
        .elements
        .iter()
        .map(|e| roots.get(phase_numerator(data, &e.coords, s)) * e.sign as f64)
        .sum();
    sum * orb.multiplier
}

/// Φ_b(x) on the grid for an arbitrary integer weight vector b ∈ P, not
/// necessarily dominant.
pub fn eval_c_grid_at(
    data: &AlgebraData,
    m: u64,
    b: &[i64],
    x: &GridPoint,
    cap: u64,
) -> Result<Complex64> {
    if m != x.m() {
        return Err(Error::MismatchedM { expected: m, got: x.m() });
    }
    let elements = orbit(data, b, CoordBasis::Weight, cap)?;
    let multiplier = (data.weyl_order() / elements.len())
        .to_f64()
        .expect("orbit multiplier fits f64");
    let orb = WeightOrbit {
        elements,
        multiplier,
    };
    let roots = RootsOfUnity::new(data.center_order() * m);
    Ok(eval_c_grid_with(data, &orb, &roots, x))
}

/// φ_b(x) on the grid for an arbitrary integer weight vector b ∈ P. Vectors
/// with a nontrivial stabilizer give the exact zero (their stabilizer
/// contains a reflection, so the signed sum cancels identically).
pub fn eval_s_grid_at(
    data: &AlgebraData,
    m: u64,
    b: &[i64],
    x: &GridPoint,
    cap: u64,
) -> Result<Complex64> {
    if m != x.m() {
        return Err(Error::MismatchedM { expected: m, got: x.m() });
    }
    let orb = signed_orbit(data, b, cap)?;
    match orb {
        None => Ok(Complex64::new(0.0, 0.0)),
        Some(orb) => {
            let roots = RootsOfUnity::new(data.center_order() * m);
            Ok(eval_s_grid_with(data, &orb, &roots, x))
        }
    }
}

/// Φ_b(y) for an arbitrary integer weight vector b ∈ P.
pub fn eval_c_real_at(data: &AlgebraData, b: &[i64], y: &RealPoint, cap: u64) -> Result<Complex64> {
    let elements = orbit(data, b, CoordBasis::Weight, cap)?;
    let multiplier = (data.weyl_order() / elements.len())
        .to_f64()
        .expect("orbit multiplier fits f64");
    let orb = WeightOrbit {
        elements,
        multiplier,
    };
    Ok(eval_c_real_with(data, &orb, y.coords()))
}

/// φ_b(y) for an arbitrary integer weight vector b ∈ P; exact zero when the
/// stabilizer of b is nontrivial.
pub fn eval_s_real_at(data: &AlgebraData, b: &[i64], y: &RealPoint, cap: u64) -> Result<Complex64> {
    let orb = signed_orbit(data, b, cap)?;
    match orb {
        None => Ok(Complex64::new(0.0, 0.0)),
        Some(orb) => Ok(eval_s_real_with(data, &orb, y.coords())),
    }
}

/// Orbit with well-defined signs: `None` when the seed has a nontrivial
/// stabilizer (then every signed sum over it vanishes).
fn signed_orbit(data: &AlgebraData, b: &[i64], cap: u64) -> Result<Option<WeightOrbit>> {
    let elements = orbit(data, b, CoordBasis::Weight, cap)?;
    if &BigUint::from(elements.len()) != data.weyl_order() {
        return Ok(None);
    }
    Ok(Some(WeightOrbit {
        elements,
        multiplier: 1.0,
    }))
}

fn real_phase(data: &AlgebraData, mu: &[i64], y: &[f64]) -> f64 {
    let pn = data.pairing_num();
    let c = data.center_order() as f64;
    let mut acc = 0.0;
    for (i, &mi) in mu.iter().enumerate() {
        if mi == 0 {
            continue;
        }
        let mut dot = 0.0;
        for (j, &yj) in y.iter().enumerate() {
            dot += pn[i][j] as f64 * yj;
        }
        acc += mi as f64 * dot;
    }
    acc / c
}

/// Φ_λ(y) at an arbitrary real point.
pub fn eval_c_real(
    data: &AlgebraData,
    lambda: &WeightPoint,
    y: &RealPoint,
    cap: u64,
) -> Result<Complex64> {
    let orb = weight_orbit(data, lambda.weight_coords(), cap)?;
    Ok(eval_c_real_with(data, &orb, y.coords()))
}

pub(crate) fn eval_c_real_with(data: &AlgebraData, orb: &WeightOrbit, y: &[f64]) -> Complex64 {
    let sum: Complex64 = orb
        .elements
        .iter()
        .map(|e| {
            let (sin, cos) =
                (2.0 * std::f64::consts::PI * real_phase(data, &e.coords, y)).sin_cos();
            Complex64::new(cos, sin)
        })
        .sum();
    sum * orb.multiplier
}

/// φ_λ(y) at an arbitrary real point. Labels fixed by a proper Weyl
/// reflection (some t_i = 0, 1 ≤ i ≤ n) make φ_λ vanish identically.
pub fn eval_s_real(
    data: &AlgebraData,
    lambda: &WeightPoint,
    y: &RealPoint,
    cap: u64,
) -> Result<Complex64> {
    if lambda.weight_coords().iter().any(|&t| t == 0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let orb = weight_orbit(data, lambda.weight_coords(), cap)?;
    Ok(eval_s_real_with(data, &orb, y.coords()))
}

pub(crate) fn eval_s_real_with(data: &AlgebraData, orb: &WeightOrbit, y: &[f64]) -> Complex64 {
    let sum: Complex64 = orb
        .elements
        .iter()
        .map(|e| {
            let (sin, cos) =
                (2.0 * std::f64::consts::PI * real_phase(data, &e.coords, y)).sin_cos();
            Complex64::new(cos, sin) * e.sign as f64
        })
        .sum();
    sum * orb.multiplier
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Series;
    use crate::grids::{enumerate_f, enumerate_lambda};
    use approx::assert_relative_eq;

    const CAP: u64 = 1 << 20;

    fn data(series: Series, rank: usize) -> AlgebraData {
        AlgebraData::new(series, rank).unwrap()
    }

    fn wo(d: &AlgebraData) -> f64 {
        d.weyl_order().to_f64().unwrap()
    }

    #[test]
    fn c_at_zero_label_is_group_order() {
        let d = data(Series::C, 2);
        let m = 3;
        let lambda = WeightPoint::new(&d, m, vec![m, 0, 0]).unwrap();
        for x in enumerate_f(&d, m, false) {
            let v = eval_c_grid(&d, &lambda, &x, CAP).unwrap();
            assert_relative_eq!(v.re, 8.0, max_relative = 1e-12);
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn c_at_origin_is_group_order() {
        let d = data(Series::G, 2);
        let m = 4;
        let origin = GridPoint::new(&d, m, vec![m, 0, 0]).unwrap();
        for lambda in enumerate_lambda(&d, m, false) {
            let v = eval_c_grid(&d, &lambda, &origin, CAP).unwrap();
            assert_relative_eq!(v.re, 12.0, max_relative = 1e-12);
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn a1_hand_computed_values() {
        let a1 = data(Series::A, 1);
        // Φ_{ω1}(ω^∨1/2) = e^{iπ/2} + e^{−iπ/2} = 0
        let lambda = WeightPoint::new(&a1, 2, vec![1, 1]).unwrap();
        let x = GridPoint::new(&a1, 2, vec![1, 1]).unwrap();
        let v = eval_c_grid(&a1, &lambda, &x, CAP).unwrap();
        assert!(v.norm() < 1e-14, "{v}");
        // φ_{ω1}(ω^∨1/4) = e^{2πi/8} − e^{−2πi/8} = i√2
        let lambda = WeightPoint::new(&a1, 4, vec![3, 1]).unwrap();
        let x = GridPoint::new(&a1, 4, vec![3, 1]).unwrap();
        let v = eval_s_grid(&a1, &lambda, &x, CAP).unwrap();
        assert!(v.re.abs() < 1e-14);
        assert_relative_eq!(v.im, 2f64.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn s_vanishes_for_boundary_labels_and_boundary_points() {
        let d = data(Series::C, 2);
        let m = 5;
        let interior_lambda = enumerate_lambda(&d, m, true);
        let boundary_lambda: Vec<_> = enumerate_lambda(&d, m, false)
            .into_iter()
            .filter(|w| !w.is_interior())
            .collect();
        for x in enumerate_f(&d, m, false) {
            for lam in &boundary_lambda {
                let v = eval_s_grid(&d, lam, &x, CAP).unwrap();
                assert_eq!(v, Complex64::new(0.0, 0.0));
            }
            if !x.is_interior() {
                for lam in &interior_lambda {
                    let v = eval_s_grid(&d, lam, &x, CAP).unwrap();
                    assert!(v.norm() <= 1e-9 * wo(&d), "{:?} {v}", x.coords());
                }
            }
        }
    }

    #[test]
    fn real_path_agrees_with_grid_path_on_grid_points() {
        let d = data(Series::C, 2);
        let m = 4;
        for lambda in enumerate_lambda(&d, m, false) {
            for x in enumerate_f(&d, m, false) {
                let exact = eval_c_grid(&d, &lambda, &x, CAP).unwrap();
                let real = eval_c_real(&d, &lambda, &RealPoint::from_grid(&x), CAP).unwrap();
                assert!((exact - real).norm() <= 1e-12 * wo(&d));
            }
        }
    }

    #[test]
    fn q_vee_periodicity() {
        let d = data(Series::G, 2);
        let lambda = WeightPoint::new(&d, 5, vec![0, 1, 1]).unwrap();
        let y = RealPoint::new(&d, vec![0.21, -0.47]).unwrap();
        // shift by α^∨_1 whose ω^∨ coordinates are the first Cartan column
        let shifted = RealPoint::new(
            &d,
            vec![
                y.coords()[0] + d.cartan()[0][0] as f64,
                y.coords()[1] + d.cartan()[1][0] as f64,
            ],
        )
        .unwrap();
        let a = eval_c_real(&d, &lambda, &y, CAP).unwrap();
        let b = eval_c_real(&d, &lambda, &shifted, CAP).unwrap();
        assert!((a - b).norm() <= 1e-12 * wo(&d));
    }

    #[test]
    fn weyl_symmetries_on_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for d in [data(Series::C, 2), data(Series::A, 2), data(Series::G, 2)] {
            let m = 4 + d.coxeter();
            let interior = enumerate_lambda(&d, m, true);
            for _ in 0..40 {
                let lam = &interior[rng.gen_range(0..interior.len())];
                let y = RealPoint::new(
                    &d,
                    (0..d.rank()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
                )
                .unwrap();
                let c0 = eval_c_real(&d, lam, &y, CAP).unwrap();
                let s0 = eval_s_real(&d, lam, &y, CAP).unwrap();
                for i in 0..=d.rank() {
                    let ry =
                        RealPoint::new(&d, crate::weyl::reflect_real(&d, i, y.coords())).unwrap();
                    if i >= 1 {
                        let c1 = eval_c_real(&d, lam, &ry, CAP).unwrap();
                        assert!((c0 - c1).norm() <= 1e-10 * wo(&d));
                    }
                    let s1 = eval_s_real(&d, lam, &ry, CAP).unwrap();
                    assert!((s0 + s1).norm() <= 1e-10 * wo(&d), "{} i={i}", d.lie_type());
                }
            }
        }
    }

    #[test]
    fn c_functions_are_real_when_minus_one_is_in_w() {
        // −1 ∈ W exactly when the orbit of a generic point contains its
        // negative; C2 and G2 qualify, A2 does not.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for d in [data(Series::C, 2), data(Series::G, 2)] {
            let orb = orbit(&d, &[1, 2], CoordBasis::Weight, CAP).unwrap();
            assert!(orb.iter().any(|e| e.coords == vec![-1, -2]));
            for lam in enumerate_lambda(&d, 5, false) {
                let y = RealPoint::new(
                    &d,
                    (0..d.rank()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
                )
                .unwrap();
                let v = eval_c_real(&d, &lam, &y, CAP).unwrap();
                assert!(v.im.abs() <= 1e-10 * wo(&d));
            }
        }
    }

    #[test]
    fn mismatched_m_is_rejected() {
        let d = data(Series::C, 2);
        let lambda = WeightPoint::new(&d, 4, vec![1, 1, 1]).unwrap();
        let x = GridPoint::new(&d, 3, vec![1, 1, 0]).unwrap();
        assert!(matches!(
            eval_c_grid(&d, &lambda, &x, CAP),
            Err(Error::MismatchedM { .. })
        ));
    }
}
