//! Structural data of the simple Lie algebras: Cartan matrices, marks,
//! lattice pairings, extended Coxeter-Dynkin diagrams and the derived
//! group-theoretic constants.
//!
//! Everything is computed in exact arithmetic from the Cartan matrix, the
//! marks and the root lengths; no Euclidean root coordinates are ever stored.
//! Node numbering: chains run 1..n left to right, branch nodes carry the
//! highest index, the extension node is 0.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    fn rank_bounds(self) -> (usize, Option<usize>, &'static str) {
        match self {
            Series::A => (1, None, "n >= 1"),
            Series::B => (3, None, "n >= 3"),
            Series::C => (2, None, "n >= 2"),
            Series::D => (4, None, "n >= 4"),
            Series::E => (6, Some(8), "n in {6, 7, 8}"),
            Series::F => (4, Some(4), "n = 4"),
            Series::G => (2, Some(2), "n = 2"),
        }
    }
}

/// A simple Lie algebra type, e.g. `C2` or `E8`. Construction validates the
/// rank range of the series (B2 is not offered; use C2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<LieType> {
        let (lo, hi, expected) = series.rank_bounds();
        if rank < lo || hi.is_some_and(|h| rank > h) {
            return Err(Error::RankOutOfRange {
                series: series.letter(),
                rank,
                expected,
            });
        }
        Ok(LieType { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Immutable structural record of one simple Lie algebra. Built once by
/// [`AlgebraData::build`]; safe to share across threads.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    lie_type: LieType,
    n: usize,
    cartan: Vec<Vec<i64>>,
    cartan_det: u64,
    marks: Vec<u64>,
    dual_marks: Vec<u64>,
    coxeter: u64,
    weyl_order: BigUint,
    root_norms: Vec<Ratio<i64>>,
    pairing_num: Vec<Vec<i64>>,
    ext_dd: Diagram,
    ext_dd_dual: Diagram,
    big_l: u64,
    big_n: u64,
    /// Coordinates of the highest root ξ = ξ^∨ in the ω^∨ basis.
    xi_coweight: Vec<i64>,
    /// Coordinates of η^∨ (the highest short root) in the ω basis.
    eta_vee_weight: Vec<i64>,
}

impl AlgebraData {
    /// Builds the full structural record for a type. Pure and deterministic.
    pub fn build(lie_type: LieType) -> AlgebraData {
        let n = lie_type.rank();
        let cartan = cartan_matrix(lie_type);
        let marks = marks(lie_type);
        let dual_marks = dual_marks(lie_type);
        let root_norms = root_norms(lie_type);
        let coxeter = 1 + marks.iter().sum::<u64>();
        debug_assert_eq!(coxeter, 1 + dual_marks.iter().sum::<u64>());

        let (det, pairing_num) = integer_adjugate(&cartan);
        let cartan_det = det.to_u64().expect("center order fits u64");

        let weyl_order = weyl_order(lie_type);
        let big_l = marks.iter().fold(1u64, |l, &m| l.lcm(&m));
        let big_n = ((n as u64 + 1) * big_l - coxeter) / big_l;

        let ext_dd = extended_diagram(&cartan, &marks, &root_norms);
        let dual_cartan = transpose(&cartan);
        let dual_norms: Vec<Ratio<i64>> = root_norms
            .iter()
            .map(|nm| Ratio::from_integer(4) / nm)
            .collect();
        let ext_dd_dual = extended_diagram(&dual_cartan, &dual_marks, &dual_norms);

        let xi_coweight = highest_root_coords(&cartan, &marks, &root_norms);
        let eta_vee_weight = highest_root_coords(&dual_cartan, &dual_marks, &dual_norms);

        AlgebraData {
            lie_type,
            n,
            cartan,
            cartan_det,
            marks,
            dual_marks,
            coxeter,
            weyl_order,
            root_norms,
            pairing_num,
            ext_dd,
            ext_dd_dual,
            big_l,
            big_n,
            xi_coweight,
            eta_vee_weight,
        }
    }

    pub fn new(series: Series, rank: usize) -> Result<AlgebraData> {
        Ok(AlgebraData::build(LieType::new(series, rank)?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Cartan matrix C with C_ij = 2⟨α_i,α_j⟩/⟨α_j,α_j⟩.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Order c of the center, equal to det C.
    pub fn center_order(&self) -> u64 {
        self.cartan_det
    }

    /// Marks m_1..m_n of the highest root.
    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    /// Dual marks m^∨_1..m^∨_n of the highest dual root.
    pub fn dual_marks(&self) -> &[u64] {
        &self.dual_marks
    }

    /// Coxeter number m = 1 + Σ m_i.
    pub fn coxeter(&self) -> u64 {
        self.coxeter
    }

    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    /// Squared root lengths ⟨α_i,α_i⟩, long roots normalized to 2.
    pub fn root_norms(&self) -> &[Ratio<i64>] {
        &self.root_norms
    }

    /// Integer matrix c·C⁻¹, i.e. the pairings ⟨ω_i, ω^∨_j⟩ scaled by c.
    pub fn pairing_num(&self) -> &[Vec<i64>] {
        &self.pairing_num
    }

    /// Extended Coxeter-Dynkin diagram on nodes 0..=n.
    pub fn ext_dd(&self) -> &Diagram {
        &self.ext_dd
    }

    /// Extended dual Coxeter-Dynkin diagram on nodes 0..=n.
    pub fn ext_dd_dual(&self) -> &Diagram {
        &self.ext_dd_dual
    }

    /// L = lcm(m_1, ..., m_n).
    pub fn big_l(&self) -> u64 {
        self.big_l
    }

    /// N from (n+1)L − (1 + m_1 + ... + m_n) = LN + N'.
    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    /// ω^∨-basis coordinates of the highest root ξ (= its own coroot).
    pub fn xi_coweight(&self) -> &[i64] {
        &self.xi_coweight
    }

    /// ω-basis coordinates of the highest short root η^∨.
    pub fn eta_vee_weight(&self) -> &[i64] {
        &self.eta_vee_weight
    }

    /// Exact pairing ⟨λ, Σ s_j ω^∨_j⟩ for λ = Σ t_i ω_i, as a rational
    /// (tᵀ · cC⁻¹ · s)/c.
    pub fn pairing(&self, t: &[i64], s: &[i64]) -> Ratio<i64> {
        assert_eq!(t.len(), self.n);
        assert_eq!(s.len(), self.n);
        let mut acc: i128 = 0;
        for (i, &ti) in t.iter().enumerate() {
            if ti == 0 {
                continue;
            }
            for (j, &sj) in s.iter().enumerate() {
                acc += ti as i128 * self.pairing_num[i][j] as i128 * sj as i128;
            }
        }
        Ratio::new(
            i64::try_from(acc).expect("pairing numerator fits i64"),
            self.cartan_det as i64,
        )
    }

    /// Volume of the fundamental domain F:
    /// (1/n!) · (1/Πm_i) · sqrt(Π 2/⟨α_i,α_i⟩) · c^(−1/2).
    pub fn volume_of_f(&self) -> f64 {
        let n_fact: f64 = (1..=self.n as u64).map(|k| k as f64).product();
        let marks_prod: f64 = self.marks.iter().map(|&m| m as f64).product();
        let norm_prod: f64 = self
            .root_norms
            .iter()
            .map(|nm| 2.0 / ratio_to_f64(nm))
            .product();
        1.0 / n_fact / marks_prod * norm_prod.sqrt() / (self.cartan_det as f64).sqrt()
    }
}

fn ratio_to_f64(r: &Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// Cartan matrix per the Fig. 1 node numbering. Chains carry −1 off-diagonal
/// entries; the asymmetric pairs sit at the short/long bonds.
fn cartan_matrix(lt: LieType) -> Vec<Vec<i64>> {
    let n = lt.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match lt.series() {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                chain(&mut c, i, i + 1);
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                chain(&mut c, i, i + 1);
            }
            // α_n short: C_{n-1,n} = −2, C_{n,n-1} = −1
            c[n - 2][n - 1] = -2;
        }
        Series::C => {
            for i in 0..n - 1 {
                chain(&mut c, i, i + 1);
            }
            // α_n long: C_{n-1,n} = −1, C_{n,n-1} = −2
            c[n - 1][n - 2] = -2;
        }
        Series::D => {
            for i in 0..n - 2 {
                chain(&mut c, i, i + 1);
            }
            chain(&mut c, n - 3, n - 1);
        }
        Series::E => {
            for i in 0..n - 2 {
                chain(&mut c, i, i + 1);
            }
            // Branch node n attaches to the chain per Fig. 1: E6 at node 3,
            // E7 at node 3, E8 at node 5.
            let attach = match n {
                6 => 2,
                7 => 2,
                8 => 4,
                _ => unreachable!(),
            };
            chain(&mut c, attach, n - 1);
        }
        Series::F => {
            chain(&mut c, 0, 1);
            chain(&mut c, 2, 3);
            // α_3, α_4 short: double bond 2 ⇒ 3
            c[1][2] = -2;
            c[2][1] = -1;
        }
        Series::G => {
            // α_1 long, α_2 short, triple bond
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    c
}

fn marks(lt: LieType) -> Vec<u64> {
    let n = lt.rank();
    match lt.series() {
        Series::A => vec![1; n],
        Series::B => {
            let mut m = vec![2; n];
            m[0] = 1;
            m
        }
        Series::C => {
            let mut m = vec![2; n];
            m[n - 1] = 1;
            m
        }
        Series::D => {
            let mut m = vec![2; n];
            m[0] = 1;
            m[n - 2] = 1;
            m[n - 1] = 1;
            m
        }
        Series::E => match n {
            6 => vec![1, 2, 3, 2, 1, 2],
            7 => vec![2, 3, 4, 3, 2, 1, 2],
            8 => vec![2, 3, 4, 5, 6, 4, 2, 3],
            _ => unreachable!(),
        },
        Series::F => vec![2, 3, 4, 2],
        Series::G => vec![2, 3],
    }
}

fn dual_marks(lt: LieType) -> Vec<u64> {
    let n = lt.rank();
    match lt.series() {
        Series::B => {
            let mut m = vec![2; n];
            m[n - 1] = 1;
            m
        }
        Series::C => {
            let mut m = vec![2; n];
            m[0] = 1;
            m
        }
        Series::F => vec![2, 4, 3, 2],
        Series::G => vec![3, 2],
        _ => marks(lt), // A, D, E are self-dual
    }
}

fn root_norms(lt: LieType) -> Vec<Ratio<i64>> {
    let n = lt.rank();
    let two = Ratio::from_integer(2);
    match lt.series() {
        Series::B => {
            let mut v = vec![two; n];
            v[n - 1] = Ratio::from_integer(1);
            v
        }
        Series::C => {
            let mut v = vec![Ratio::from_integer(1); n];
            v[n - 1] = two;
            v
        }
        Series::F => vec![two, two, Ratio::from_integer(1), Ratio::from_integer(1)],
        Series::G => vec![two, Ratio::new(2, 3)],
        _ => vec![two; n],
    }
}

fn weyl_order(lt: LieType) -> BigUint {
    let n = lt.rank() as u64;
    let fact = |k: u64| -> BigUint { (1..=k).map(BigUint::from).product() };
    match lt.series() {
        Series::A => fact(n + 1),
        Series::B | Series::C => (BigUint::one() << lt.rank()) * fact(n),
        Series::D => (BigUint::one() << (lt.rank() - 1)) * fact(n),
        Series::E => match n {
            6 => BigUint::from(51840u64),
            7 => BigUint::from(2903040u64),
            8 => BigUint::from(696729600u64),
            _ => unreachable!(),
        },
        Series::F => BigUint::from(1152u64),
        Series::G => BigUint::from(12u64),
    }
}

/// Exact determinant and adjugate (det·C⁻¹) of an integer matrix, via
/// Gaussian elimination over big rationals.
fn integer_adjugate(c: &[Vec<i64>]) -> (BigInt, Vec<Vec<i64>>) {
    let n = c.len();
    // Augment with the identity and eliminate.
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(BigInt::from(c[i][j]))
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for j in 0..2 * n {
            a[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let sub = &f * &a[col][j];
                    a[r][j] -= sub;
                }
            }
        }
    }
    assert!(det.is_integer() && det.is_positive());
    let det_int = det.to_integer();
    let adj: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &a[i][n + j] * &det;
                    assert!(v.is_integer(), "adjugate must be integral");
                    v.to_integer().to_i64().expect("adjugate entry fits i64")
                })
                .collect()
        })
        .collect();
    (det_int, adj)
}

/// Gram matrix ⟨α_i,α_j⟩ = C_ij·⟨α_j,α_j⟩/2 of the simple (co)roots.
fn gram(cartan: &[Vec<i64>], norms: &[Ratio<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = cartan.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(cartan[i][j]) * norms[j] / 2)
                .collect()
        })
        .collect()
}

/// Extended diagram for a root system given by (cartan, marks, norms). Node 0
/// stands for −θ where θ = Σ m_i α_i is the highest root; its bonds follow
/// from the Gram matrix, which also covers the dual diagrams with their
/// special low-rank shapes.
fn extended_diagram(cartan: &[Vec<i64>], marks: &[u64], norms: &[Ratio<i64>]) -> Diagram {
    let n = cartan.len();
    let g = gram(cartan, norms);
    // ⟨θ, α_j⟩ and ⟨θ, θ⟩
    let theta_dot: Vec<Ratio<i64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Ratio::from_integer(marks[i] as i64) * g[i][j])
                .sum()
        })
        .collect();
    let theta_norm: Ratio<i64> = (0..n)
        .map(|i| Ratio::from_integer(marks[i] as i64) * theta_dot[i])
        .sum();

    let mut bonds = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = cartan[i][j] * cartan[j][i];
            if m != 0 {
                bonds.push((i + 1, j + 1, m as u8));
            }
        }
    }
    for (j, dot) in theta_dot.iter().enumerate() {
        if !dot.is_zero() {
            // A_0j·A_j0 with α_0 = −θ
            let a0j = Ratio::from_integer(2) * dot / norms[j];
            let aj0 = Ratio::from_integer(2) * dot / theta_norm;
            let m = a0j * aj0;
            assert!(m.is_integer());
            bonds.push((0, j + 1, m.to_integer() as u8));
        }
    }
    let mut node_norms = Vec::with_capacity(n + 1);
    node_norms.push(theta_norm);
    node_norms.extend_from_slice(norms);
    Diagram::new(n + 1, bonds, node_norms)
}

/// ω^∨-basis (resp. ω-basis) coordinates of the coroot of the highest root,
/// i.e. ⟨θ, α_j⟩·2/⟨θ,θ⟩ per node. Integral because θ^∨ pairs integrally
/// with every root.
fn highest_root_coords(cartan: &[Vec<i64>], marks: &[u64], norms: &[Ratio<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let g = gram(cartan, norms);
    let theta_dot: Vec<Ratio<i64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Ratio::from_integer(marks[i] as i64) * g[i][j])
                .sum()
        })
        .collect();
    let theta_norm: Ratio<i64> = (0..n)
        .map(|i| Ratio::from_integer(marks[i] as i64) * theta_dot[i])
        .sum();
    theta_dot
        .iter()
        .map(|d| {
            let v = Ratio::from_integer(2) * d / theta_norm;
            assert!(v.is_integer(), "highest-root coroot coordinates are integral");
            v.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn data(series: Series, rank: usize) -> AlgebraData {
        AlgebraData::new(series, rank).unwrap()
    }

    #[test]
    fn rank_bounds_enforced() {
        assert!(LieType::new(Series::B, 2).is_err());
        assert!(LieType::new(Series::D, 3).is_err());
        assert!(LieType::new(Series::E, 9).is_err());
        assert!(LieType::new(Series::F, 5).is_err());
        assert!(LieType::new(Series::G, 3).is_err());
        assert!(LieType::new(Series::A, 0).is_err());
        assert!(LieType::new(Series::A, 1).is_ok());
        assert!(LieType::new(Series::C, 2).is_ok());
    }

    #[test]
    fn c2_constants() {
        let d = data(Series::C, 2);
        assert_eq!(d.marks(), &[2, 1]);
        assert_eq!(d.dual_marks(), &[1, 2]);
        assert_eq!(d.center_order(), 2);
        assert_eq!(d.coxeter(), 4);
        assert_eq!(d.weyl_order(), &BigUint::from(8u32));
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn a1_constants() {
        let d = data(Series::A, 1);
        assert_eq!(d.cartan(), &[vec![2]]);
        assert_eq!(d.center_order(), 2);
        assert_eq!(d.marks(), &[1]);
        assert_eq!(d.coxeter(), 2);
        assert_eq!(d.weyl_order(), &BigUint::from(2u32));
        // Quadruple bond between the extension node and node 1.
        assert_eq!(d.ext_dd().bond_between(0, 1), Some(4));
    }

    #[test]
    fn e8_constants() {
        let d = data(Series::E, 8);
        assert_eq!(d.center_order(), 1);
        assert_eq!(d.coxeter(), 30);
        assert_eq!(d.big_l(), 60);
        assert_eq!(d.big_n(), 8);
        assert_eq!(d.weyl_order(), &BigUint::from(696729600u64)); // 2^14·3^5·5^2·7
    }

    #[test]
    fn pairing_examples() {
        let c2 = data(Series::C, 2);
        assert_eq!(c2.pairing(&[0, 0], &[1, 0]), Ratio::from_integer(0));
        // (C⁻¹)_{12} of C2 is 1/2: ⟨ω_1, ω^∨_2⟩ computed below from an
        // explicit realization.
        assert_eq!(c2.pairing(&[1, 0], &[0, 1]), Ratio::new(1, 2));
        let a1 = data(Series::A, 1);
        assert_eq!(a1.pairing(&[1], &[1]), Ratio::new(1, 2));
    }

    /// Pin the pairing-matrix orientation against explicit root coordinates.
    /// C2: α_1 = (e1−e2)/√2 (short), α_2 = √2·e2 (long). The fundamental
    /// weights and coweights follow by duality, and every ⟨ω_i, ω^∨_j⟩ must
    /// equal pairing_num_ij / c.
    #[test]
    fn pairing_matrix_matches_euclidean_realization() {
        let d = data(Series::C, 2);
        let s = std::f64::consts::SQRT_2;
        let omega = [[1.0 / s, 0.0], [0.0, 0.0]]; // ω_1 = e1/√2, ω_2 set below
        let mut omega = omega;
        omega[1] = [1.0 / s, 1.0 / s]; // ω_2 = (e1+e2)/√2
        let omega_vee = [[s, 0.0], [s / 2.0, s / 2.0]]; // ω^∨_1 = √2 e1, ω^∨_2 = (e1+e2)/√2
        for i in 0..2 {
            for j in 0..2 {
                let dot = omega[i][0] * omega_vee[j][0] + omega[i][1] * omega_vee[j][1];
                let expected = d.pairing_num()[i][j] as f64 / d.center_order() as f64;
                assert_relative_eq!(dot, expected, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn volume_examples() {
        let g2 = data(Series::G, 2);
        assert_relative_eq!(g2.volume_of_f(), 3f64.sqrt() / 12.0, max_relative = 1e-13);
        let a1 = data(Series::A, 1);
        assert_relative_eq!(a1.volume_of_f(), 1.0 / 2f64.sqrt(), max_relative = 1e-13);
        let f4 = data(Series::F, 4);
        assert_relative_eq!(f4.volume_of_f(), 1.0 / 576.0, max_relative = 1e-13);
    }

    #[test]
    fn pairing_num_times_cartan_is_center_times_identity() {
        for d in all_small() {
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0i64;
                    for k in 0..n {
                        acc += d.pairing_num()[i][k] * d.cartan()[k][j];
                    }
                    let expected = if i == j { d.center_order() as i64 } else { 0 };
                    assert_eq!(acc, expected, "{} entry ({i},{j})", d.lie_type());
                }
            }
        }
    }

    #[test]
    fn dual_marks_are_a_permutation_of_marks() {
        for d in all_small() {
            let mut a = d.marks().to_vec();
            let mut b = d.dual_marks().to_vec();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "{}", d.lie_type());
            assert_eq!(
                d.coxeter(),
                1 + d.dual_marks().iter().sum::<u64>(),
                "{}",
                d.lie_type()
            );
        }
    }

    #[test]
    fn pairing_num_symmetrizes_with_root_norms() {
        for d in all_small() {
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    let lhs = Ratio::from_integer(d.pairing_num()[i][j]) * d.root_norms()[j] / 2;
                    let rhs = Ratio::from_integer(d.pairing_num()[j][i]) * d.root_norms()[i] / 2;
                    assert_eq!(lhs, rhs, "{} ({i},{j})", d.lie_type());
                }
            }
        }
    }

    #[test]
    fn extension_node_attachment_follows_the_highest_root() {
        // Cᵀ·marks is nonnegative and is nonzero exactly at the nodes the
        // extension node bonds to.
        for d in all_small() {
            let n = d.rank();
            for j in 0..n {
                let v: i64 = (0..n)
                    .map(|i| d.cartan()[i][j] * d.marks()[i] as i64)
                    .sum();
                assert!(v >= 0, "{} column {j}", d.lie_type());
                let attached = d.ext_dd().bond_between(0, j + 1).is_some();
                assert_eq!(v > 0, attached, "{} column {j}", d.lie_type());
            }
        }
    }

    #[test]
    fn expected_extension_attachments() {
        let attach = |d: &AlgebraData, dual: bool| -> Vec<usize> {
            let dd = if dual { d.ext_dd_dual() } else { d.ext_dd() };
            (1..=d.rank()).filter(|&j| dd.bond_between(0, j).is_some()).collect()
        };
        assert_eq!(attach(&data(Series::A, 4), false), vec![1, 4]);
        assert_eq!(attach(&data(Series::B, 3), false), vec![2]);
        assert_eq!(attach(&data(Series::C, 3), false), vec![1]);
        assert_eq!(attach(&data(Series::D, 5), false), vec![2]);
        assert_eq!(attach(&data(Series::E, 6), false), vec![6]);
        assert_eq!(attach(&data(Series::E, 7), false), vec![1]);
        assert_eq!(attach(&data(Series::E, 8), false), vec![1]);
        assert_eq!(attach(&data(Series::F, 4), false), vec![1]);
        assert_eq!(attach(&data(Series::G, 2), false), vec![1]);
        // Dual diagrams: B and C swap shapes, C2/G2/F4 have the special
        // attachments, A/D/E are self-dual.
        assert_eq!(attach(&data(Series::B, 3), true), vec![1]);
        assert_eq!(attach(&data(Series::C, 3), true), vec![2]);
        assert_eq!(attach(&data(Series::C, 2), true), vec![2]);
        assert_eq!(attach(&data(Series::G, 2), true), vec![2]);
        assert_eq!(attach(&data(Series::F, 4), true), vec![4]);
        assert_eq!(attach(&data(Series::E, 7), true), vec![1]);
        assert_eq!(attach(&data(Series::A, 4), true), vec![1, 4]);
        assert_eq!(attach(&data(Series::D, 5), true), vec![2]);
    }

    #[test]
    fn c2_dual_diagram_shape() {
        // Node 0 double-bonds to node 2 and does not touch node 1.
        let d = data(Series::C, 2);
        let dd = d.ext_dd_dual();
        assert_eq!(dd.bond_between(0, 2), Some(2));
        assert_eq!(dd.bond_between(0, 1), None);
        assert_eq!(dd.bond_between(1, 2), Some(2));
    }

    #[test]
    fn non_extended_diagram_is_connected() {
        for d in all_small() {
            let nodes: Vec<usize> = (1..=d.rank()).collect();
            assert_eq!(d.ext_dd().components(&nodes).len(), 1, "{}", d.lie_type());
            assert_eq!(d.ext_dd_dual().components(&nodes).len(), 1, "{}", d.lie_type());
        }
    }

    #[test]
    fn highest_root_coordinate_vectors() {
        // ⟨ξ, α_j⟩ read in the ω^∨ basis; spot-check C2 and G2 against hand
        // computation, and verify Σ marks_j · xi_j = ⟨ξ,ξ⟩ = 2 in general.
        let c2 = data(Series::C, 2);
        assert_eq!(c2.xi_coweight(), &[1, 0]);
        let g2 = data(Series::G, 2);
        assert_eq!(g2.xi_coweight(), &[1, 0]);
        for d in all_small() {
            let dot: i64 = d
                .marks()
                .iter()
                .zip(d.xi_coweight())
                .map(|(&m, &x)| m as i64 * x)
                .sum();
            assert_eq!(dot, 2, "{}", d.lie_type());
            let dual_dot: i64 = d
                .dual_marks()
                .iter()
                .zip(d.eta_vee_weight())
                .map(|(&m, &x)| m as i64 * x)
                .sum();
            assert_eq!(dual_dot, 2, "{}", d.lie_type());
        }
    }

    fn all_small() -> Vec<AlgebraData> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(data(Series::A, n));
        }
        for n in 3..=8 {
            v.push(data(Series::B, n));
        }
        for n in 2..=8 {
            v.push(data(Series::C, n));
        }
        for n in 4..=8 {
            v.push(data(Series::D, n));
        }
        for n in 6..=8 {
            v.push(data(Series::E, n));
        }
        v.push(data(Series::F, 4));
        v.push(data(Series::G, 2));
        v
    }
}
