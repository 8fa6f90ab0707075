//! Weyl group actions in weight/coweight coordinates, orbit enumeration with
//! determinant signs, torus canonical forms, and stabilizer orders via the
//! extended-diagram subgraph rule.
//!
//! Reflections act on integer coordinate vectors: in the ω basis
//! (r_i t)_j = t_j − t_i C_ij, in the ω^∨ basis the transposed Cartan matrix
//! applies. Nothing here ever materializes Euclidean root coordinates.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::AlgebraData;
use crate::diagram::{classify_component, Diagram};
use crate::error::{Error, Result};
use crate::grids::{GridPoint, WeightPoint};

/// Which coordinate basis a vector lives in: ω (weights) or ω^∨ (coweights).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordBasis {
    Weight,
    Coweight,
}

/// Simple reflection r_i on ω-basis coordinates, i in 1..=n. Involution.
pub fn reflect_weight(data: &AlgebraData, i: usize, t: &[i64]) -> Vec<i64> {
    assert!((1..=data.rank()).contains(&i));
    let c = data.cartan();
    let ti = t[i - 1];
    t.iter()
        .enumerate()
        .map(|(j, &tj)| tj - ti * c[i - 1][j])
        .collect()
}

/// Simple reflection r_i on ω^∨-basis coordinates, i in 1..=n.
pub fn reflect_coweight(data: &AlgebraData, i: usize, s: &[i64]) -> Vec<i64> {
    assert!((1..=data.rank()).contains(&i));
    let c = data.cartan();
    let si = s[i - 1];
    s.iter()
        .enumerate()
        .map(|(j, &sj)| sj - si * c[j][i - 1])
        .collect()
}

fn reflect_in_basis(data: &AlgebraData, basis: CoordBasis, i: usize, v: &[i64]) -> Vec<i64> {
    match basis {
        CoordBasis::Weight => reflect_weight(data, i, v),
        CoordBasis::Coweight => reflect_coweight(data, i, v),
    }
}

/// Affine reflection r_0 on ω^∨ numerators: s ↦ s − (Σ m_i s_i − M)·ξ where
/// ξ is the highest root in ω^∨ coordinates. Fixes the far wall ⟨x,ξ⟩ = 1.
pub fn affine_reflect_coweight(data: &AlgebraData, m: u64, s: &[i64]) -> Vec<i64> {
    let level: i64 = data
        .marks()
        .iter()
        .zip(s)
        .map(|(&mk, &si)| mk as i64 * si)
        .sum();
    let shift = level - m as i64;
    s.iter()
        .zip(data.xi_coweight())
        .map(|(&si, &xi)| si - shift * xi)
        .collect()
}

/// Affine reflection r^∨_{0,M} on ω-basis weight coordinates:
/// t ↦ t − (Σ m^∨_i t_i − M)·η^∨.
pub fn affine_reflect_weight(data: &AlgebraData, m: u64, t: &[i64]) -> Vec<i64> {
    let level: i64 = data
        .dual_marks()
        .iter()
        .zip(t)
        .map(|(&mk, &ti)| mk as i64 * ti)
        .sum();
    let shift = level - m as i64;
    t.iter()
        .zip(data.eta_vee_weight())
        .map(|(&ti, &eta)| ti - shift * eta)
        .collect()
}

/// Reflection on a real point in ω^∨ coordinates; i = 0 is the affine
/// reflection r_0 in the wall ⟨y,ξ⟩ = 1.
pub fn reflect_real(data: &AlgebraData, i: usize, y: &[f64]) -> Vec<f64> {
    if i == 0 {
        let level: f64 = data
            .marks()
            .iter()
            .zip(y)
            .map(|(&mk, &yi)| mk as f64 * yi)
            .sum();
        let shift = level - 1.0;
        return y
            .iter()
            .zip(data.xi_coweight())
            .map(|(&yi, &xi)| yi - shift * xi as f64)
            .collect();
    }
    assert!(i <= data.rank());
    let c = data.cartan();
    let yi = y[i - 1];
    y.iter()
        .enumerate()
        .map(|(j, &yj)| yj - yi * c[j][i - 1] as f64)
        .collect()
}

fn check_cap(data: &AlgebraData, cap: u64) -> Result<()> {
    if data.weyl_order() > &BigUint::from(cap) {
        return Err(Error::OrbitCapExceeded {
            weyl_order: data.weyl_order().clone(),
            cap,
        });
    }
    Ok(())
}

/// One point of a Weyl orbit: integer coordinates plus det w of the group
/// element that produced it. The sign is canonical only for seeds with
/// trivial stabilizer (interior dominant seeds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitElement {
    pub coords: Vec<i64>,
    pub sign: i8,
}

/// Full Weyl orbit of `seed`, by breadth-first closure under the simple
/// reflections. Refuses when |W| exceeds `cap`. Output sorted descending.
pub fn orbit(
    data: &AlgebraData,
    seed: &[i64],
    basis: CoordBasis,
    cap: u64,
) -> Result<Vec<OrbitElement>> {
    assert_eq!(seed.len(), data.rank());
    check_cap(data, cap)?;
    let mut seen: HashMap<Vec<i64>, i8> = HashMap::new();
    seen.insert(seed.to_vec(), 1);
    let mut frontier = vec![(seed.to_vec(), 1i8)];
    while let Some((v, sign)) = frontier.pop() {
        for i in 1..=data.rank() {
            let w = reflect_in_basis(data, basis, i, &v);
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), -sign);
                frontier.push((w, -sign));
            }
        }
    }
    let mut out: Vec<OrbitElement> = seen
        .into_iter()
        .map(|(coords, sign)| OrbitElement { coords, sign })
        .collect();
    out.sort_unstable_by(|a, b| b.coords.cmp(&a.coords));
    Ok(out)
}

/// A Weyl group element as an integer matrix on coordinate columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub det: i8,
}

impl WeylElement {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }
}

/// Every element of W as a matrix in the chosen basis, enumerated by closure
/// under the generator matrices. Intended for brute-force cross-checks;
/// refuses above `cap`.
pub fn group_elements(
    data: &AlgebraData,
    basis: CoordBasis,
    cap: u64,
) -> Result<Vec<WeylElement>> {
    check_cap(data, cap)?;
    let n = data.rank();
    let c = data.cartan();
    let gens: Vec<Vec<Vec<i64>>> = (1..=n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| {
                            let mut v = i64::from(j == k);
                            if k == i - 1 {
                                v -= match basis {
                                    CoordBasis::Weight => c[i - 1][j],
                                    CoordBasis::Coweight => c[j][i - 1],
                                };
                            }
                            v
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let id: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|k| i64::from(j == k)).collect())
        .collect();
    let mut seen: HashMap<Vec<Vec<i64>>, i8> = HashMap::new();
    seen.insert(id.clone(), 1);
    let mut frontier = vec![(id, 1i8)];
    while let Some((g, sign)) = frontier.pop() {
        for r in &gens {
            let h: Vec<Vec<i64>> = (0..n)
                .map(|row| {
                    (0..n)
                        .map(|col| (0..n).map(|k| r[row][k] * g[k][col]).sum())
                        .collect()
                })
                .collect();
            if !seen.contains_key(&h) {
                seen.insert(h.clone(), -sign);
                frontier.push((h, -sign));
            }
        }
    }
    let mut out: Vec<WeylElement> = seen
        .into_iter()
        .map(|(matrix, det)| WeylElement { matrix, det })
        .collect();
    out.sort_unstable_by(|a, b| a.matrix.cmp(&b.matrix));
    Ok(out)
}

/// Canonical representatives of coordinate vectors modulo an integer lattice,
/// with the Hermite normal form of the lattice basis cached. Used to compare
/// points of the torus (1/M)P^∨/Q^∨ and weight classes P/MQ exactly.
#[derive(Debug, Clone)]
pub struct ClassReducer {
    hnf: Vec<Vec<i128>>,
}

impl ClassReducer {
    /// Reducer modulo M·Q^∨ on ω^∨ numerators (the Cartan columns span Q^∨).
    pub fn torus(data: &AlgebraData, m: u64) -> ClassReducer {
        let n = data.rank();
        let basis: Vec<Vec<i128>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| m as i128 * data.cartan()[r][c] as i128)
                    .collect()
            })
            .collect();
        ClassReducer {
            hnf: hnf_columns(basis),
        }
    }

    /// Reducer modulo M·Q on ω coordinates (the Cartan rows span Q).
    pub fn weights(data: &AlgebraData, m: u64) -> ClassReducer {
        let n = data.rank();
        let basis: Vec<Vec<i128>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| m as i128 * data.cartan()[c][r] as i128)
                    .collect()
            })
            .collect();
        ClassReducer {
            hnf: hnf_columns(basis),
        }
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let n = v.len();
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for i in 0..n {
            let q = w[i].div_euclid(self.hnf[i][i]);
            if q != 0 {
                for r in i..n {
                    w[r] -= q * self.hnf[r][i];
                }
            }
        }
        w.into_iter().map(|x| x as i64).collect()
    }
}

/// Column-operation Hermite normal form, lower triangular with positive
/// diagonal. The input columns must span a full-rank lattice.
fn hnf_columns(mut b: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let n = b.len();
    for i in 0..n {
        loop {
            let nonzero: Vec<usize> = (i..n).filter(|&j| b[i][j] != 0).collect();
            let &jmin = nonzero
                .iter()
                .min_by_key(|&&j| b[i][j].abs())
                .expect("lattice basis is full rank");
            if jmin != i {
                for row in b.iter_mut() {
                    row.swap(i, jmin);
                }
            }
            if b[i][i] < 0 {
                for row in b.iter_mut() {
                    row[i] = -row[i];
                }
            }
            let p = b[i][i];
            let mut done = true;
            for j in i + 1..n {
                if b[i][j] != 0 {
                    let q = b[i][j].div_euclid(p);
                    for row in b.iter_mut() {
                        let sub = q * row[i];
                        row[j] -= sub;
                    }
                    if b[i][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
    }
    b
}

/// Stabilizer order together with its decomposition into the Weyl orders of
/// the zero-node subdiagram components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerReport {
    pub order: BigUint,
    pub component_weyl_orders: Vec<BigUint>,
    pub zero_nodes: Vec<usize>,
}

fn subgraph_stabilizer(diagram: &Diagram, coords: &[u64]) -> StabilizerReport {
    let zero_nodes: Vec<usize> = coords
        .iter()
        .enumerate()
        .filter_map(|(i, &v)| (v == 0).then_some(i))
        .collect();
    let mut orders = Vec::new();
    let mut order = BigUint::from(1u32);
    for comp in diagram.components(&zero_nodes) {
        let bonds = diagram.induced_bonds(&comp);
        let w = classify_component(&comp, &bonds)
            .expect("zero-node subdiagram components are finite type");
        order *= &w;
        orders.push(w);
    }
    StabilizerReport {
        order,
        component_weyl_orders: orders,
        zero_nodes,
    }
}

/// h_x: order of Stab_W(x) for x ∈ F_M, from the zero-coordinate subgraph of
/// the extended diagram.
pub fn stabilizer_order_x(data: &AlgebraData, p: &GridPoint) -> StabilizerReport {
    subgraph_stabilizer(data.ext_dd(), p.coords())
}

/// h^∨_λ: order of Stab^∨_W(λ) for λ ∈ Λ_M, from the zero-coordinate
/// subgraph of the extended dual diagram.
pub fn stabilizer_order_lambda(data: &AlgebraData, w: &WeightPoint) -> StabilizerReport {
    subgraph_stabilizer(data.ext_dd_dual(), w.coords())
}

/// ε(x) = |W| / h_x, the size of the Weyl orbit of x on the torus.
pub fn epsilon(data: &AlgebraData, p: &GridPoint) -> BigUint {
    let h = stabilizer_order_x(data, p).order;
    let (q, r) = data.weyl_order().div_rem(&h);
    debug_assert!(r.is_zero(), "stabilizer order divides |W|");
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Series;
    use num_traits::ToPrimitive;

    fn data(series: Series, rank: usize) -> AlgebraData {
        AlgebraData::new(series, rank).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let a1 = data(Series::A, 1);
        assert_eq!(reflect_weight(&a1, 1, &[3]), vec![-3]);
        let c2 = data(Series::C, 2);
        assert_eq!(reflect_weight(&c2, 1, &[1, 0]), vec![-1, 1]);
        assert_eq!(reflect_weight(&c2, 2, &[0, 0]), vec![0, 0]);
    }

    #[test]
    fn orbit_examples() {
        let c2 = data(Series::C, 2);
        assert_eq!(orbit(&c2, &[1, 1], CoordBasis::Weight, 1000).unwrap().len(), 8);
        assert_eq!(orbit(&c2, &[0, 0], CoordBasis::Weight, 1000).unwrap().len(), 1);
        let a2 = data(Series::A, 2);
        assert_eq!(orbit(&a2, &[1, 0], CoordBasis::Weight, 1000).unwrap().len(), 3);
    }

    #[test]
    fn orbit_cap_refusal_names_both_numbers() {
        let e8 = data(Series::E, 8);
        let err = orbit(&e8, &[1; 8], CoordBasis::Weight, 10_000_000).unwrap_err();
        match err {
            Error::OrbitCapExceeded { weyl_order, cap } => {
                assert_eq!(weyl_order, BigUint::from(696729600u64));
                assert_eq!(cap, 10_000_000);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn interior_orbit_signs_balance() {
        let c2 = data(Series::C, 2);
        let orb = orbit(&c2, &[1, 1], CoordBasis::Weight, 1000).unwrap();
        let plus = orb.iter().filter(|e| e.sign == 1).count();
        assert_eq!(plus * 2, orb.len());
    }

    #[test]
    fn stabilizer_examples() {
        let c2 = data(Series::C, 2);
        let p = GridPoint::new(&c2, 2, vec![0, 1, 0]).unwrap();
        let rep = stabilizer_order_x(&c2, &p);
        assert_eq!(rep.zero_nodes, vec![0, 2]);
        assert_eq!(rep.component_weyl_orders.len(), 2);
        assert_eq!(rep.order, BigUint::from(4u32));

        let p = GridPoint::new(&c2, 4, vec![1, 1, 1]).unwrap();
        assert_eq!(stabilizer_order_x(&c2, &p).order, BigUint::from(1u32));

        let p = GridPoint::new(&c2, 1, vec![1, 0, 0]).unwrap();
        let rep = stabilizer_order_x(&c2, &p);
        assert_eq!(rep.zero_nodes, vec![1, 2]);
        assert_eq!(rep.order, BigUint::from(8u32));
    }

    #[test]
    fn dual_stabilizer_examples() {
        let c2 = data(Series::C, 2);
        let w = WeightPoint::new(&c2, 4, vec![1, 1, 1]).unwrap();
        assert_eq!(stabilizer_order_lambda(&c2, &w).order, BigUint::from(1u32));

        // t = [0,0,2]: zero nodes {0,1} are disconnected on the dual extended
        // diagram (node 0 attaches to node 2 there), giving A1 × A1. Verified
        // against the brute-force count below.
        let w = WeightPoint::new(&c2, 4, vec![0, 0, 2]).unwrap();
        let rep = stabilizer_order_lambda(&c2, &w);
        assert_eq!(rep.zero_nodes, vec![0, 1]);
        assert_eq!(rep.order, BigUint::from(4u32));

        let w = WeightPoint::new(&c2, 1, vec![1, 0, 0]).unwrap();
        assert_eq!(stabilizer_order_lambda(&c2, &w).order, BigUint::from(8u32));
    }

    fn brute_stabilizer_x(data: &AlgebraData, p: &GridPoint) -> u64 {
        let reducer = ClassReducer::torus(data, p.m());
        let s: Vec<i64> = p.interior_coords().iter().map(|&v| v as i64).collect();
        let canon = reducer.reduce(&s);
        group_elements(data, CoordBasis::Coweight, 1 << 20)
            .unwrap()
            .iter()
            .filter(|g| reducer.reduce(&g.apply(&s)) == canon)
            .count() as u64
    }

    fn brute_stabilizer_lambda(data: &AlgebraData, w: &WeightPoint) -> u64 {
        let reducer = ClassReducer::weights(data, w.m());
        let t: Vec<i64> = w.weight_coords().iter().map(|&v| v as i64).collect();
        let canon = reducer.reduce(&t);
        group_elements(data, CoordBasis::Weight, 1 << 20)
            .unwrap()
            .iter()
            .filter(|g| reducer.reduce(&g.apply(&t)) == canon)
            .count() as u64
    }

    #[test]
    fn subgraph_rule_matches_brute_force_on_c2_and_g2() {
        for d in [data(Series::C, 2), data(Series::G, 2)] {
            for m in 1..=5u64 {
                for p in crate::grids::enumerate_f(&d, m, false) {
                    let expected = brute_stabilizer_x(&d, &p);
                    assert_eq!(
                        stabilizer_order_x(&d, &p).order,
                        BigUint::from(expected),
                        "{} M={m} {:?}",
                        d.lie_type(),
                        p.coords()
                    );
                }
                for w in crate::grids::enumerate_lambda(&d, m, false) {
                    let expected = brute_stabilizer_lambda(&d, &w);
                    assert_eq!(
                        stabilizer_order_lambda(&d, &w).order,
                        BigUint::from(expected),
                        "{} M={m} {:?}",
                        d.lie_type(),
                        w.coords()
                    );
                }
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        let c2 = data(Series::C, 2);
        let p = GridPoint::new(&c2, 4, vec![1, 1, 1]).unwrap();
        assert_eq!(epsilon(&c2, &p), BigUint::from(8u32));
        let p = GridPoint::new(&c2, 2, vec![0, 1, 0]).unwrap();
        assert_eq!(epsilon(&c2, &p), BigUint::from(2u32));
        let e8 = data(Series::E, 8);
        let p = GridPoint::new(&e8, 30, vec![1; 9]).unwrap();
        assert_eq!(epsilon(&e8, &p), BigUint::from(696729600u64));
    }

    #[test]
    fn epsilon_matches_torus_orbit_size() {
        // BFS the orbit on the torus with canonical-form dedup.
        for d in [data(Series::C, 2), data(Series::A, 2), data(Series::G, 2)] {
            for m in 1..=4u64 {
                let reducer = ClassReducer::torus(&d, m);
                for p in crate::grids::enumerate_f(&d, m, false) {
                    let s: Vec<i64> = p.interior_coords().iter().map(|&v| v as i64).collect();
                    let mut seen = std::collections::HashSet::new();
                    seen.insert(reducer.reduce(&s));
                    let mut frontier = vec![s];
                    while let Some(v) = frontier.pop() {
                        for i in 1..=d.rank() {
                            let w = reflect_coweight(&d, i, &v);
                            if seen.insert(reducer.reduce(&w)) {
                                frontier.push(w);
                            }
                        }
                    }
                    assert_eq!(
                        BigUint::from(seen.len()),
                        epsilon(&d, &p),
                        "{} M={m} {:?}",
                        d.lie_type(),
                        p.coords()
                    );
                }
            }
        }
    }

    #[test]
    fn torus_partition_sums_to_group_order() {
        for d in [data(Series::C, 2), data(Series::A, 3), data(Series::G, 2)] {
            for m in 1..=6u64 {
                let total: BigUint = crate::grids::enumerate_f(&d, m, false)
                    .iter()
                    .map(|p| epsilon(&d, p))
                    .sum();
                let expected =
                    BigUint::from(d.center_order()) * BigUint::from(m).pow(d.rank() as u32);
                assert_eq!(total, expected, "{} M={m}", d.lie_type());
            }
        }
    }

    #[test]
    fn classify_full_diagrams_agrees_with_weyl_order() {
        for d in [
            data(Series::A, 5),
            data(Series::B, 4),
            data(Series::C, 3),
            data(Series::D, 6),
            data(Series::E, 6),
            data(Series::E, 7),
            data(Series::E, 8),
            data(Series::F, 4),
            data(Series::G, 2),
        ] {
            let nodes: Vec<usize> = (1..=d.rank()).collect();
            let bonds = d.ext_dd().induced_bonds(&nodes);
            assert_eq!(
                &classify_component(&nodes, &bonds).unwrap(),
                d.weyl_order(),
                "{}",
                d.lie_type()
            );
        }
    }

    #[test]
    fn group_elements_enumerates_the_whole_group() {
        for d in [data(Series::A, 2), data(Series::C, 2), data(Series::G, 2), data(Series::B, 3)] {
            for basis in [CoordBasis::Weight, CoordBasis::Coweight] {
                let els = group_elements(&d, basis, 1 << 20).unwrap();
                assert_eq!(BigUint::from(els.len()), *d.weyl_order());
                let plus = els.iter().filter(|e| e.det == 1).count();
                assert_eq!(plus * 2, els.len());
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn reflections_are_involutions(vals in proptest::collection::vec(-9i64..10, 3), i in 1usize..4) {
            let d = data(Series::B, 3);
            let once = reflect_weight(&d, i, &vals);
            proptest::prop_assert_eq!(reflect_weight(&d, i, &once), vals.clone());
            let once = reflect_coweight(&d, i, &vals);
            proptest::prop_assert_eq!(reflect_coweight(&d, i, &once), vals);
        }

        #[test]
        fn pairing_is_weyl_invariant(t in proptest::collection::vec(-4i64..5, 2), s in proptest::collection::vec(-4i64..5, 2), i in 1usize..3) {
            let d = data(Series::C, 2);
            let lhs = d.pairing(&t, &s);
            let rhs = d.pairing(&reflect_weight(&d, i, &t), &reflect_coweight(&d, i, &s));
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn orbit_size_divides_group_order(t in proptest::collection::vec(0i64..4, 2)) {
            let d = data(Series::G, 2);
            let orb = orbit(&d, &t, CoordBasis::Weight, 1000).unwrap();
            let wo = d.weyl_order().to_u64().unwrap();
            proptest::prop_assert_eq!(wo % orb.len() as u64, 0);
        }

        #[test]
        fn class_reduction_is_idempotent_and_translation_invariant(
            s in proptest::collection::vec(-20i64..21, 2),
            q in proptest::collection::vec(-3i64..4, 2),
            m in 1u64..6,
        ) {
            let d = data(Series::C, 2);
            let red = ClassReducer::torus(&d, m);
            let canon = red.reduce(&s);
            proptest::prop_assert_eq!(red.reduce(&canon), canon.clone());
            // shift by a lattice vector M·C·q
            let shifted: Vec<i64> = (0..2).map(|r| {
                s[r] + m as i64 * (0..2).map(|c| d.cartan()[r][c] * q[c]).sum::<i64>()
            }).collect();
            proptest::prop_assert_eq!(red.reduce(&shifted), canon);
        }
    }
}
