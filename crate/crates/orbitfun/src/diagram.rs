//! Extended Coxeter-Dynkin diagrams and Weyl-order classification of their
//! subdiagrams.
//!
//! A diagram is stored as a set of bonds `(i, j, multiplicity)` on nodes
//! `0..=n`, node 0 being the extension node, together with the squared length
//! of the (co)root each node stands for. Stabilizer computations only ever
//! need the Weyl-group *order* of a connected subdiagram, so classification
//! does not distinguish B from C.

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Bond between two diagram nodes. Multiplicity is 1, 2, 3, or 4 (the
/// quadruple bond occurs only on the extended A1 diagram).
pub type Bond = (usize, usize, u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    node_count: usize,
    bonds: Vec<Bond>,
    norms: Vec<Ratio<i64>>,
}

impl Diagram {
    pub(crate) fn new(node_count: usize, mut bonds: Vec<Bond>, norms: Vec<Ratio<i64>>) -> Self {
        assert_eq!(norms.len(), node_count);
        for b in &mut bonds {
            if b.0 > b.1 {
                std::mem::swap(&mut b.0, &mut b.1);
            }
        }
        bonds.sort_unstable();
        Diagram {
            node_count,
            bonds,
            norms,
        }
    }

    /// Number of nodes; `n + 1` for an extended diagram of rank `n`.
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    /// Squared lengths of the node vectors, long roots normalized to 2
    /// (resp. 4/⟨α,α⟩ on dual diagrams).
    pub fn norms(&self) -> &[Ratio<i64>] {
        &self.norms
    }

    pub fn bond_between(&self, i: usize, j: usize) -> Option<u8> {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.bonds
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map(|&(_, _, m)| m)
    }

    /// Nodes adjacent to `i`.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.bonds
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Bonds of the subdiagram induced on `nodes`.
    pub fn induced_bonds(&self, nodes: &[usize]) -> Vec<Bond> {
        self.bonds
            .iter()
            .copied()
            .filter(|&(a, b, _)| nodes.contains(&a) && nodes.contains(&b))
            .collect()
    }

    /// Connected components of the subdiagram induced on `nodes`, each
    /// returned sorted.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = nodes.to_vec();
        remaining.sort_unstable();
        let mut out = Vec::new();
        while let Some(&start) = remaining.first() {
            let mut comp = vec![start];
            let mut frontier = vec![start];
            remaining.retain(|&v| v != start);
            while let Some(v) = frontier.pop() {
                for w in self.neighbors(v) {
                    if remaining.contains(&w) {
                        remaining.retain(|&u| u != w);
                        comp.push(w);
                        frontier.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn factorial(k: u64) -> BigUint {
    (1..=k).map(BigUint::from).product()
}

/// Weyl-group order of the connected finite-type diagram on `nodes` with the
/// given bonds. The shape alone determines the order: simply-laced chains are
/// A-type, chains with an end double bond are B/C (same order), the 4-chain
/// with a middle double bond is F4, the triple-bond pair is G2, and branched
/// simply-laced trees are D or E according to arm lengths.
pub fn classify_component(nodes: &[usize], bonds: &[Bond]) -> Result<BigUint> {
    let k = nodes.len() as u64;
    let err = || Error::UnrecognizedComponent {
        nodes: nodes.to_vec(),
    };
    if k == 0 {
        return Err(err());
    }
    if k == 1 {
        return Ok(BigUint::from(2u32)); // A1
    }
    if bonds.len() != nodes.len() - 1 {
        return Err(err()); // finite-type diagrams are trees
    }
    let degree = |v: usize| bonds.iter().filter(|&&(a, b, _)| a == v || b == v).count();
    let max_degree = nodes.iter().map(|&v| degree(v)).max().unwrap();
    let max_mult = bonds.iter().map(|&(_, _, m)| m).max().unwrap();
    let n_multi = bonds.iter().filter(|&&(_, _, m)| m > 1).count();

    match (max_degree, max_mult, n_multi) {
        (1, 3, 1) if k == 2 => Ok(BigUint::from(12u32)), // G2
        (_, 1, 0) if max_degree <= 2 => Ok(factorial(k + 1)), // A_k chain
        (1..=2, 2, 1) => {
            // Chain with one double bond: B/C if it touches a leaf, F4 if not.
            let &(a, b, _) = bonds.iter().find(|&&(_, _, m)| m == 2).unwrap();
            if degree(a) == 1 || degree(b) == 1 {
                Ok((BigUint::from(1u32) << k as usize) * factorial(k)) // B/C_k
            } else if k == 4 {
                Ok(BigUint::from(1152u32)) // F4
            } else {
                Err(err())
            }
        }
        (3, 1, 0) => {
            // Branched simply-laced tree: D_k or E_k by sorted arm lengths.
            let branch = *nodes.iter().find(|&&v| degree(v) == 3).ok_or_else(err)?;
            if nodes.iter().filter(|&&v| degree(v) == 3).count() != 1 {
                return Err(err());
            }
            let mut arms: Vec<u64> = Vec::new();
            for start in {
                let mut nb: Vec<usize> = Vec::new();
                for &(a, b, _) in bonds {
                    if a == branch {
                        nb.push(b);
                    } else if b == branch {
                        nb.push(a);
                    }
                }
                nb
            } {
                let mut len = 1u64;
                let mut prev = branch;
                let mut cur = start;
                loop {
                    let next: Vec<usize> = bonds
                        .iter()
                        .filter_map(|&(a, b, _)| {
                            if a == cur && b != prev {
                                Some(b)
                            } else if b == cur && a != prev {
                                Some(a)
                            } else {
                                None
                            }
                        })
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [one] => {
                            prev = cur;
                            cur = *one;
                            len += 1;
                        }
                        _ => return Err(err()),
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok((BigUint::from(1u32) << (k as usize - 1)) * factorial(k)), // D_k
                [1, 2, 2] => Ok(BigUint::from(51840u64)),      // E6
                [1, 2, 3] => Ok(BigUint::from(2903040u64)),    // E7
                [1, 2, 4] => Ok(BigUint::from(696729600u64)),  // E8
                _ => Err(err()),
            }
        }
        _ => Err(err()),
    }
}
