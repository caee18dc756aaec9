//! Connected components of Cayley graphs and the coset structure
//! behind them.
//!
//! Two vertices fall in one component exactly when they lie in the same
//! left coset of the subgroup generated by the connection set, so every
//! operation here has an algebraic shadow that tests cross-check.

use std::fmt;

use crate::graph::CayleyGraph;
use crate::group::{Elem, FiniteGroup, GeneratorSet, Subgroup};

/// Partition of a graph's vertices into connected components. Blocks are
/// ordered by their minimal element, elements ascending inside a block,
/// and each block's representative is its minimal element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    blocks: Vec<Vec<Elem>>,
    reps: Vec<Elem>,
    assignment: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn blocks(&self) -> &[Vec<Elem>] {
        &self.blocks
    }

    pub fn block(&self, id: usize) -> &[Elem] {
        &self.blocks[id]
    }

    pub fn rep(&self, id: usize) -> Elem {
        self.reps[id]
    }

    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    /// Block id holding the given vertex.
    pub fn block_of(&self, v: Elem) -> usize {
        self.assignment[v.index()]
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Splits a Cayley graph into its connected components by union-find
/// over the edge set.
pub fn decompose(graph: &CayleyGraph) -> ComponentDecomposition {
    let n = graph.group().order();
    let mut uf = UnionFind::new(n);
    for &(u, v) in graph.edges() {
        uf.union(u.index(), v.index());
    }
    let mut block_id = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    for v in 0..n {
        let root = uf.find(v);
        if block_id[root] == usize::MAX {
            block_id[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_id[root]].push(Elem(v));
    }
    let reps = blocks.iter().map(|b| b[0]).collect();
    let mut assignment = vec![0; n];
    for (id, block) in blocks.iter().enumerate() {
        for &v in block {
            assignment[v.index()] = id;
        }
    }
    ComponentDecomposition {
        blocks,
        reps,
        assignment,
    }
}

/// Number of components of Cay(G, A), which the coset correspondence
/// pins to the index of the generated subgroup.
pub fn component_count(group: &FiniteGroup, gens: &GeneratorSet) -> usize {
    decompose(&CayleyGraph::new(group, gens)).len()
}

/// Vertex set of the component containing the identity; set-equal to the
/// subgroup generated by the connection set.
pub fn identity_component(decomposition: &ComponentDecomposition) -> &[Elem] {
    decomposition.block(decomposition.block_of(Elem(0)))
}

/// First place the coset correspondence fails, if it ever does.
#[derive(Debug, Clone)]
pub struct CosetCounterexample {
    pub block: usize,
    pub detail: String,
}

impl fmt::Display for CosetCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block {}: {}", self.block, self.detail)
    }
}

/// Checks that every component's vertex set is exactly its
/// representative's left coset of the generated subgroup and that the
/// blocks coincide with the coset partition. A returned counterexample
/// indicates an implementation defect, not bad input.
pub fn verify_coset_structure(
    group: &FiniteGroup,
    gens: &GeneratorSet,
    decomposition: &ComponentDecomposition,
) -> Result<(), CosetCounterexample> {
    let subgroup = group.closure(gens);
    let cosets = group.left_cosets(&subgroup);
    if cosets.len() != decomposition.len() {
        return Err(CosetCounterexample {
            block: 0,
            detail: format!("{} blocks but {} cosets", decomposition.len(), cosets.len()),
        });
    }
    for (id, block) in decomposition.blocks().iter().enumerate() {
        let rep = decomposition.rep(id);
        let mut coset: Vec<Elem> = subgroup
            .elements()
            .iter()
            .map(|&h| group.mul(rep, h))
            .collect();
        coset.sort();
        if &coset != block {
            return Err(CosetCounterexample {
                block: id,
                detail: format!(
                    "vertex set differs from the coset of representative {}",
                    group.name(rep)
                ),
            });
        }
        if cosets[id] != *block {
            return Err(CosetCounterexample {
                block: id,
                detail: "block order disagrees with the coset partition".into(),
            });
        }
    }
    Ok(())
}

/// The left translation carrying one component onto another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsomorphismWitness {
    pub from_block: usize,
    pub to_block: usize,
    pub translator: Elem,
}

/// Builds and verifies the translation x -> t*x with t = rep(to) *
/// rep(from)^-1, checking it is an edge-preserving bijection between the
/// two components.
///
/// Panics if the verification fails (the isomorphism theorem guarantees
/// it cannot) or if a block id is out of range.
pub fn translation_isomorphism(
    graph: &CayleyGraph,
    decomposition: &ComponentDecomposition,
    from_block: usize,
    to_block: usize,
) -> IsomorphismWitness {
    let group = graph.group();
    let translator = group.mul(
        decomposition.rep(to_block),
        group.inv(decomposition.rep(from_block)),
    );
    let source = decomposition.block(from_block);
    let target = decomposition.block(to_block);
    let mut image: Vec<Elem> = source.iter().map(|&x| group.mul(translator, x)).collect();
    image.sort();
    assert_eq!(
        image, target,
        "translation does not map block {from_block} onto block {to_block}"
    );
    for (i, &u) in source.iter().enumerate() {
        for &v in &source[i + 1..] {
            let same = graph.has_edge(u, v)
                == graph.has_edge(group.mul(translator, u), group.mul(translator, v));
            assert!(
                same,
                "translation breaks adjacency between {} and {}",
                group.name(u),
                group.name(v)
            );
        }
    }
    IsomorphismWitness {
        from_block,
        to_block,
        translator,
    }
}

/// Exponent of a letter in a path word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Pos,
    Neg,
}

/// A word a1^e1 a2^e2 ... an^en over the connection set witnessing a
/// path: its product equals u^-1 v for the path's endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWord {
    pub letters: Vec<(Elem, Sign)>,
}

impl PathWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self, group: &FiniteGroup) -> Elem {
        let mut acc = group.identity();
        for &(gen, sign) in &self.letters {
            let step = match sign {
                Sign::Pos => gen,
                Sign::Neg => group.inv(gen),
            };
            acc = group.mul(acc, step);
        }
        acc
    }
}

/// Shortest generator word joining u to v, found by breadth-first search,
/// or None when the vertices lie in different components. `u == v` yields
/// the empty word.
pub fn path_witness(graph: &CayleyGraph, u: Elem, v: Elem) -> Option<PathWord> {
    let group = graph.group();
    let labels = graph.gens().non_identity();
    let mut prev: Vec<Option<(Elem, Elem, Sign)>> = vec![None; group.order()];
    let mut seen = vec![false; group.order()];
    let mut queue = std::collections::VecDeque::new();
    seen[u.index()] = true;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &a in &labels {
            for (next, sign) in [
                (group.mul(x, a), Sign::Pos),
                (group.mul(x, group.inv(a)), Sign::Neg),
            ] {
                if !seen[next.index()] {
                    seen[next.index()] = true;
                    prev[next.index()] = Some((x, a, sign));
                    queue.push_back(next);
                }
            }
        }
    }
    if !seen[v.index()] {
        return None;
    }
    let mut letters = Vec::new();
    let mut cur = v;
    while cur != u {
        let (from, gen, sign) = prev[cur.index()].expect("reached vertex has a parent");
        letters.push((gen, sign));
        cur = from;
    }
    letters.reverse();
    let word = PathWord { letters };
    debug_assert_eq!(word.evaluate(group), group.mul(group.inv(u), v));
    Some(word)
}

/// Component shape of the Cayley graph of a whole subgroup: every
/// component is a complete graph on |H| vertices and the edge total is
/// |G|(|H|-1)/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupGraphStats {
    pub components: usize,
    pub each_complete: bool,
    pub edge_total: usize,
}

/// Builds Cay(G, H) for a validated subgroup H and verifies the complete
/// component structure, panicking on any disagreement (which would be an
/// implementation defect).
pub fn subgroup_graph_stats(group: &FiniteGroup, subgroup: &Subgroup) -> SubgroupGraphStats {
    let gens = subgroup.as_generator_set();
    let graph = CayleyGraph::new(group, &gens);
    let decomposition = decompose(&graph);
    let components = decomposition.len();
    assert_eq!(
        components,
        group.index_of(subgroup),
        "component count differs from the subgroup index"
    );
    let each_complete = decomposition.blocks().iter().all(|block| {
        block.len() == subgroup.order()
            && block
                .iter()
                .enumerate()
                .all(|(i, &u)| block[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
    });
    assert!(each_complete, "a component is not a complete graph");
    let expected = group.order() * (subgroup.order() - 1);
    assert_eq!(expected % 2, 0, "edge total must be an integer");
    let edge_total = graph.edge_count();
    assert_eq!(edge_total, expected / 2, "edge total disagrees");
    SubgroupGraphStats {
        components,
        each_complete,
        edge_total,
    }
}
