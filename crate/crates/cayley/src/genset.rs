//! Generating-set constructions and the grow-then-prune search for a
//! minimal generating set.
//!
//! Growing adds one connector v1^-1 v2 per round, where v2 is picked
//! outside the component of the fixed base vertex v1, until the Cayley
//! graph is connected. Pruning then retests the added generators in
//! reverse order, dropping each one whose removal keeps the graph
//! connected. The last-added generator is never retested: the set
//! without it is exactly the set that was still disconnected before it
//! was added.

use crate::components::{decompose, ComponentDecomposition};
use crate::error::{Error, Result};
use crate::graph::CayleyGraph;
use crate::group::{Elem, FiniteGroup, GeneratorSet};

/// How connector elements are strung between component representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorMode {
    /// Adds v1^-1 v2, v2^-1 v3, ..., v(k-1)^-1 vk.
    Chain,
    /// Adds v1^-1 v2, v1^-1 v3, ..., v1^-1 vk.
    Star,
}

/// Extends a connection set with connectors between the representatives
/// of the given decomposition; the result always generates the group, so
/// its Cayley graph is connected.
pub fn connectors(
    group: &FiniteGroup,
    gens: &GeneratorSet,
    decomposition: &ComponentDecomposition,
    mode: ConnectorMode,
) -> GeneratorSet {
    let reps = decomposition.reps();
    let mut out = gens.clone();
    match mode {
        ConnectorMode::Chain => {
            for pair in reps.windows(2) {
                out.insert(group.mul(group.inv(pair[0]), pair[1]));
            }
        }
        ConnectorMode::Star => {
            let base = group.inv(reps[0]);
            for &rep in &reps[1..] {
                out.insert(group.mul(base, rep));
            }
        }
    }
    out
}

/// Upper bound |A'| + k - 1 on the rank of the group, where A' is the
/// connection set without the identity and k the number of components of
/// its Cayley graph. The star construction meets this bound exactly
/// whenever the identity is absent.
pub fn rank_upper_bound(group: &FiniteGroup, gens: &GeneratorSet) -> usize {
    let k = decompose(&CayleyGraph::new(group, gens)).len();
    gens.non_identity().len() + k - 1
}

/// How the grow phase picks the vertex v2 outside the base component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionPolicy {
    /// Smallest-index element outside the base vertex's component.
    FirstInOrder,
    /// Consume the listed elements in order; each must lie outside the
    /// base component at its turn. Leftover entries are ignored.
    Scripted(Vec<Elem>),
}

/// One step of a grow-then-prune run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// A generator entered the set; `chosen` is the picked vertex v2
    /// (None for the initial generator) and `components` the component
    /// count of the Cayley graph after the addition.
    Grow {
        added: Elem,
        chosen: Option<Elem>,
        components: usize,
    },
    /// A generator was retested during pruning.
    Prune {
        tested: Elem,
        connected: bool,
        removed: bool,
    },
}

/// Ordered record of every grow and prune step of one run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GrowPruneTrace {
    pub steps: Vec<TraceStep>,
}

impl GrowPruneTrace {
    /// Component counts along the grow phase, in order.
    pub fn grow_component_counts(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                TraceStep::Grow { components, .. } => Some(*components),
                TraceStep::Prune { .. } => None,
            })
            .collect()
    }
}

/// Result of a grow-then-prune run: a minimal generating set, the full
/// trace, the set size when growing finished, and the rank bound
/// |{a1}| + k - 1 implied by the starting singleton.
#[derive(Debug, Clone)]
pub struct MinGenResult {
    pub generators: GeneratorSet,
    pub trace: GrowPruneTrace,
    pub grow_size: usize,
    pub rank_bound: usize,
}

/// Runs the grow-then-prune algorithm from the given non-identity start
/// element. The trivial group short-circuits to the empty set, since no
/// valid start exists there.
///
/// The returned set generates the group and no proper subset of it does;
/// both facts are re-checked through subgroup closure, independently of
/// the graph connectivity used by the algorithm itself.
pub fn minimal_generating_set(
    group: &FiniteGroup,
    start: Elem,
    policy: SelectionPolicy,
) -> Result<MinGenResult> {
    if group.order() == 1 {
        return Ok(MinGenResult {
            generators: GeneratorSet::new(),
            trace: GrowPruneTrace::default(),
            grow_size: 0,
            rank_bound: 0,
        });
    }
    if start == group.identity() {
        return Err(Error::Usage(
            "the start element must not be the identity".into(),
        ));
    }

    let base = start; // v1 stays fixed for the whole run
    let mut policy = policy;
    let mut gens: GeneratorSet = [start].into_iter().collect();
    let mut added = vec![start];
    let mut steps = Vec::new();

    let mut decomposition = decompose(&CayleyGraph::new(group, &gens));
    let rank_bound = decomposition.len();
    steps.push(TraceStep::Grow {
        added: start,
        chosen: None,
        components: decomposition.len(),
    });

    while !decomposition.is_connected() {
        let picked = pick_outside(group, &mut policy, &decomposition, base)?;
        let connector = group.mul(group.inv(base), picked);
        let fresh = gens.insert(connector);
        debug_assert!(fresh, "a connector to a new component cannot repeat");
        added.push(connector);
        decomposition = decompose(&CayleyGraph::new(group, &gens));
        steps.push(TraceStep::Grow {
            added: connector,
            chosen: Some(picked),
            components: decomposition.len(),
        });
    }
    let grow_size = added.len();

    for &tested in added[..added.len() - 1].iter().rev() {
        let candidate = gens.without(tested);
        let connected = decompose(&CayleyGraph::new(group, &candidate)).is_connected();
        if connected {
            gens = candidate;
        }
        steps.push(TraceStep::Prune {
            tested,
            connected,
            removed: connected,
        });
    }

    assert_eq!(
        group.closure(&gens).order(),
        group.order(),
        "the pruned set must still generate"
    );
    for m in gens.iter() {
        assert_ne!(
            group.closure(&gens.without(m)).order(),
            group.order(),
            "no proper subset may generate"
        );
    }

    Ok(MinGenResult {
        generators: gens,
        trace: GrowPruneTrace { steps },
        grow_size,
        rank_bound,
    })
}

fn pick_outside(
    group: &FiniteGroup,
    policy: &mut SelectionPolicy,
    decomposition: &ComponentDecomposition,
    base: Elem,
) -> Result<Elem> {
    let base_block = decomposition.block_of(base);
    match policy {
        SelectionPolicy::FirstInOrder => Ok(group
            .elements()
            .find(|&v| decomposition.block_of(v) != base_block)
            .expect("a disconnected graph has another component")),
        SelectionPolicy::Scripted(script) => {
            if script.is_empty() {
                return Err(Error::Usage(
                    "scripted policy ran out of picks before the graph connected".into(),
                ));
            }
            let picked = script.remove(0);
            if decomposition.block_of(picked) == base_block {
                return Err(Error::Usage(format!(
                    "scripted pick {} lies in the base component",
                    group.name(picked)
                )));
            }
            Ok(picked)
        }
    }
}

/// Per-element removal outcome for a generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RemovalCheck {
    pub removed: Elem,
    pub subgroup_order: usize,
    pub index: usize,
}

/// Certificate that a generating set is minimal: for each member, the
/// order and index of the subgroup generated without it.
#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub entries: Vec<RemovalCheck>,
    pub minimal: bool,
}

/// Certifies minimality of a generating set by closing every
/// one-element-removed subset. Errors when the set does not generate the
/// group in the first place.
pub fn explain_minimality(group: &FiniteGroup, gens: &GeneratorSet) -> Result<MinimalityReport> {
    if group.closure(gens).order() != group.order() {
        return Err(Error::Usage(
            "the given set does not generate the group".into(),
        ));
    }
    let entries: Vec<RemovalCheck> = gens
        .iter()
        .map(|m| {
            let sub = group.closure(&gens.without(m));
            RemovalCheck {
                removed: m,
                subgroup_order: sub.order(),
                index: group.index_of(&sub),
            }
        })
        .collect();
    let minimal = entries.iter().all(|check| check.index > 1);
    Ok(MinimalityReport { entries, minimal })
}
