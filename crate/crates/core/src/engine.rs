//! The mutation method: tilt at the maximal-phase green vertex until all vertices are red.
//!
//! Each step evaluates the central charge on the c-vectors of the green
//! vertices of the current framed quiver and mutates at the unique one of
//! largest phase. The c-vector recorded at that step is the class of the
//! stable object being tilted at, so the recorded classes come out in strictly
//! decreasing phase.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::charge::{phase_cmp, phase_float, CentralCharge, RationalComplex};
use crate::error::{Error, Result};
use crate::quiver::{ClassVector, FramedQuiver, Permutation, Quiver};

/// Step budget used when the caller does not supply one.
pub const DEFAULT_BUDGET: usize = 1000;

/// One tilt of the mutation method.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenStep {
    pub vertex: usize,
    pub stable_class: ClassVector,
    /// `Z(stable_class)`, exact.
    pub central_value: RationalComplex,
    pub phase_display: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    MaximalReached,
    BudgetExceeded,
}

/// Transcript of a run of the mutation method.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenRun {
    pub quiver: Quiver,
    pub charge: CentralCharge,
    pub steps: Vec<GreenStep>,
    pub status: RunStatus,
    pub final_quiver: FramedQuiver,
}

impl GreenRun {
    pub fn is_maximal(&self) -> bool {
        self.status == RunStatus::MaximalReached
    }

    /// Recorded classes in decreasing phase order.
    pub fn stable_classes(&self) -> Vec<ClassVector> {
        self.steps.iter().map(|s| s.stable_class.clone()).collect()
    }

    pub fn vertex_sequence(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

pub fn run_mutation_method(q: &Quiver, z: &CentralCharge, budget: usize) -> Result<GreenRun> {
    if z.n() != q.n() {
        return Err(Error::DimensionMismatch {
            expected: q.n(),
            found: z.n(),
        });
    }
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut current = q.frame();
    let mut steps = Vec::new();
    let status = loop {
        let green = current.green_vertices();
        if green.is_empty() {
            break RunStatus::MaximalReached;
        }
        if steps.len() == budget {
            break RunStatus::BudgetExceeded;
        }
        let mut best: Option<(usize, ClassVector, RationalComplex)> = None;
        let mut tie: Option<(usize, usize)> = None;
        for &j in &green {
            let c = current.c_vector(j);
            let w = z.evaluate(&c)?;
            match &best {
                None => best = Some((j, c, w)),
                Some((bj, _, bw)) => match phase_cmp(&w, bw)? {
                    Ordering::Greater => {
                        best = Some((j, c, w));
                        tie = None;
                    }
                    Ordering::Equal => tie = Some((*bj, j)),
                    Ordering::Less => {}
                },
            }
        }
        if let Some(vertices) = tie {
            return Err(Error::NondiscreteCharge {
                step: steps.len() + 1,
                vertices,
            });
        }
        let (vertex, stable_class, central_value) = best.expect("green set is nonempty");
        current = current.mutate(vertex)?;
        let phase_display = phase_float(&central_value);
        steps.push(GreenStep {
            vertex,
            stable_class,
            central_value,
            phase_display,
        });
    };
    Ok(GreenRun {
        quiver: q.clone(),
        charge: z.clone(),
        steps,
        status,
        final_quiver: current,
    })
}

/// Projection of a run onto its recorded classes.
pub fn stable_classes(run: &GreenRun) -> Vec<ClassVector> {
    run.stable_classes()
}

/// Result of a bounded search for maximal green sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MgsEnumeration {
    /// Maximal green sequences found, sorted lexicographically.
    pub sequences: Vec<Vec<usize>>,
    /// `false` when the node budget cut the search short.
    pub complete: bool,
    /// Number of mutations performed.
    pub nodes: usize,
}

/// Depth-first search over green mutations from the principal extension.
pub fn enumerate_mgs(q: &Quiver, max_len: usize, node_budget: usize) -> Result<MgsEnumeration> {
    if max_len == 0 || node_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let mut search = Search {
        max_len,
        node_budget,
        nodes: 0,
        aborted: false,
        path: Vec::new(),
        found: Vec::new(),
    };
    search.visit(&q.frame())?;
    let mut sequences = search.found;
    sequences.sort();
    Ok(MgsEnumeration {
        sequences,
        complete: !search.aborted,
        nodes: search.nodes,
    })
}

struct Search {
    max_len: usize,
    node_budget: usize,
    nodes: usize,
    aborted: bool,
    path: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search {
    fn visit(&mut self, f: &FramedQuiver) -> Result<()> {
        let green = f.green_vertices();
        if green.is_empty() {
            self.found.push(self.path.clone());
            return Ok(());
        }
        if self.path.len() == self.max_len {
            return Ok(());
        }
        for k in green {
            if self.nodes == self.node_budget {
                self.aborted = true;
                return Ok(());
            }
            self.nodes += 1;
            let next = f.mutate(k)?;
            self.path.push(k);
            self.visit(&next)?;
            self.path.pop();
            if self.aborted {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Checks that a maximal run returns to a permuted copy of the starting quiver.
///
/// Returns `pi` with final c-vectors `c_j = -e_{pi(j)}` and
/// `final.mult(i, j) == quiver.mult(pi(i), pi(j))` on the mutable part.
pub fn self_duality_check(run: &GreenRun) -> Result<Permutation> {
    if !run.is_maximal() {
        return Err(Error::NotMaximal);
    }
    let n = run.quiver.n();
    let mut images = Vec::with_capacity(n);
    for c in run.final_quiver.c_matrix() {
        let neg = c.entries().iter().filter(|&&x| x != 0).count();
        let pos = c.entries().iter().position(|&x| x == -1);
        match pos {
            Some(p) if neg == 1 => images.push(p + 1),
            _ => return Err(Error::SelfDualityViolated),
        }
    }
    let pi = Permutation::from_images(images).ok_or(Error::SelfDualityViolated)?;
    let principal = run.final_quiver.principal_part();
    for i in 1..=n {
        for j in 1..=n {
            if principal.mult(i, j) != run.quiver.mult(pi.apply(i), pi.apply(j)) {
                return Err(Error::SelfDualityViolated);
            }
        }
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a2() -> Quiver {
        Quiver::linear_a(2)
    }

    fn classes(v: &[&[i64]]) -> Vec<ClassVector> {
        v.iter().map(|c| ClassVector::new(c.to_vec())).collect()
    }

    #[test]
    fn a2_length_three() {
        let z = CentralCharge::from_ints(&[(1, 1), (-1, 1)]).unwrap();
        let run = run_mutation_method(&a2(), &z, DEFAULT_BUDGET).unwrap();
        assert_eq!(run.status, RunStatus::MaximalReached);
        assert_eq!(run.vertex_sequence(), vec![2, 1, 2]);
        assert_eq!(run.stable_classes(), classes(&[&[0, 1], &[1, 1], &[1, 0]]));
        let pi = self_duality_check(&run).unwrap();
        assert_eq!(pi.images(), &[2, 1]);
        assert_eq!(
            run.final_quiver.arrows(),
            vec![(2, 1, 1), (3, 2, 1), (4, 1, 1)]
        );
    }

    #[test]
    fn a2_length_two() {
        let z = CentralCharge::from_ints(&[(-1, 1), (1, 1)]).unwrap();
        let run = run_mutation_method(&a2(), &z, DEFAULT_BUDGET).unwrap();
        assert_eq!(run.vertex_sequence(), vec![1, 2]);
        assert_eq!(stable_classes(&run), classes(&[&[1, 0], &[0, 1]]));
        assert!(self_duality_check(&run).unwrap().is_identity());
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::arrowless(1);
        for z in [(5, 1), (-2, 0), (0, 3)] {
            let charge = CentralCharge::from_ints(&[z]).unwrap();
            let run = run_mutation_method(&q, &charge, 1).unwrap();
            assert!(run.is_maximal());
            assert_eq!(run.stable_classes(), classes(&[&[1]]));
            assert!(self_duality_check(&run).unwrap().is_identity());
        }
    }

    #[test]
    fn kronecker_divergent_side() {
        let z = CentralCharge::from_ints(&[(1, 1), (-1, 1)]).unwrap();
        let run = run_mutation_method(&Quiver::kronecker(2), &z, 50).unwrap();
        assert_eq!(run.status, RunStatus::BudgetExceeded);
        assert_eq!(run.len(), 50);
        assert_eq!(
            run.stable_classes()[..5],
            classes(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5]])[..]
        );
        assert_eq!(self_duality_check(&run), Err(Error::NotMaximal));
    }

    #[test]
    fn tie_is_an_error() {
        let z = CentralCharge::from_ints(&[(1, 1), (1, 1)]).unwrap();
        assert_eq!(
            run_mutation_method(&a2(), &z, 10),
            Err(Error::NondiscreteCharge {
                step: 1,
                vertices: (1, 2)
            })
        );
    }

    #[test]
    fn bad_inputs() {
        let z = CentralCharge::from_ints(&[(1, 1)]).unwrap();
        assert!(matches!(
            run_mutation_method(&a2(), &z, 10),
            Err(Error::DimensionMismatch { .. })
        ));
        let z = CentralCharge::from_ints(&[(1, 1), (-1, 1)]).unwrap();
        assert_eq!(run_mutation_method(&a2(), &z, 0), Err(Error::ZeroBudget));
    }

    #[test]
    fn budget_boundary_counts_as_maximal() {
        let z = CentralCharge::from_ints(&[(1, 1), (-1, 1)]).unwrap();
        let run = run_mutation_method(&a2(), &z, 3).unwrap();
        assert!(run.is_maximal());
        let run = run_mutation_method(&a2(), &z, 2).unwrap();
        assert_eq!(run.status, RunStatus::BudgetExceeded);
    }

    #[test]
    fn enumerate_examples() {
        let e = enumerate_mgs(&a2(), 5, 10_000).unwrap();
        assert!(e.complete);
        assert_eq!(e.sequences, vec![vec![1, 2], vec![2, 1, 2]]);
        let e = enumerate_mgs(&Quiver::arrowless(1), 5, 100).unwrap();
        assert_eq!(e.sequences, vec![vec![1]]);
        let e = enumerate_mgs(&Quiver::arrowless(2), 5, 100).unwrap();
        assert_eq!(e.sequences, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn enumerate_respects_bounds() {
        let e = enumerate_mgs(&a2(), 2, 10_000).unwrap();
        assert_eq!(e.sequences, vec![vec![1, 2]]);
        let e = enumerate_mgs(&a2(), 5, 1).unwrap();
        assert!(!e.complete);
        assert_eq!(e.nodes, 1);
        assert_eq!(enumerate_mgs(&a2(), 0, 1), Err(Error::ZeroBudget));
    }
}
