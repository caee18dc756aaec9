//! Cayley digraphs and graphs for an arbitrary connection set.
//!
//! For a group G and subset A, the digraph has an arc (g, g*a) for every
//! g in G and every non-identity a in A; identity members of A are
//! dropped silently so no loops appear. The undirected graph is the
//! underlying graph of the digraph. Keeping the inducing generator on
//! each arc makes the digraph double as the color digraph.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GeneratorSet};

/// Fixed edge-color palette for DOT output, indexed by a generator's
/// position among the non-identity members of the connection set. The
/// first three mirror the usual blue/red/green hand-drawn convention.
pub const PALETTE: [&str; 12] = [
    "blue",
    "red",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
    "olive",
    "navy",
    "teal",
    "maroon",
];

/// A labeled arc (source, source*label).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub source: Elem,
    pub target: Elem,
    pub label: Elem,
}

/// The Cayley digraph of (G, A). Arcs are ordered by source index, then
/// by the label's insertion position in the generator set.
#[derive(Debug, Clone)]
pub struct CayleyDigraph<'g> {
    group: &'g FiniteGroup,
    gens: GeneratorSet,
    arcs: Vec<Arc>,
}

impl<'g> CayleyDigraph<'g> {
    pub fn new(group: &'g FiniteGroup, gens: &GeneratorSet) -> Self {
        let labels = gens.non_identity();
        let mut arcs = Vec::with_capacity(group.order() * labels.len());
        for g in group.elements() {
            for &a in &labels {
                arcs.push(Arc {
                    source: g,
                    target: group.mul(g, a),
                    label: a,
                });
            }
        }
        CayleyDigraph {
            group,
            gens: gens.clone(),
            arcs,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// In/out-degree of every vertex, which equals the number of
    /// non-identity generators. Recounts from the arc set and panics if
    /// any vertex disagrees; that would be a construction defect.
    pub fn degree_stats(&self) -> DigraphDegreeStats {
        let n = self.group.order();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for arc in &self.arcs {
            outdeg[arc.source.index()] += 1;
            indeg[arc.target.index()] += 1;
        }
        let expected = self.gens.non_identity().len();
        let regular = indeg.iter().all(|&d| d == expected) && outdeg.iter().all(|&d| d == expected);
        assert!(
            regular,
            "digraph is not {expected}-regular; arc construction is defective"
        );
        DigraphDegreeStats {
            regular,
            in_degree: expected,
            out_degree: expected,
        }
    }

    /// DOT rendering of the color digraph: one node per element, one arc
    /// per labeled arc, colored by the label's palette position.
    pub fn to_dot(&self, options: &DotOptions) -> Result<String> {
        let labels = self.gens.non_identity();
        let colors = options.colors_for(labels.len())?;
        let color_of = |label: Elem| {
            let pos = labels.iter().position(|&a| a == label).expect("arc label");
            colors[pos].as_str()
        };
        let mut out = String::from("digraph cayley {\n");
        for v in self.group.elements() {
            out.push_str(&format!(
                "  {} [label=\"{}\"];\n",
                v.index(),
                escape(self.group.name(v))
            ));
        }
        for arc in &self.arcs {
            out.push_str(&format!(
                "  {} -> {} [color=\"{}\"];\n",
                arc.source.index(),
                arc.target.index(),
                color_of(arc.label)
            ));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

/// The (undirected) Cayley graph of (G, A): the underlying graph of the
/// digraph, with mutual arcs collapsed into a single edge.
#[derive(Debug, Clone)]
pub struct CayleyGraph<'g> {
    group: &'g FiniteGroup,
    gens: GeneratorSet,
    edges: Vec<(Elem, Elem)>,  // u < v, sorted
    adjacency: Vec<Vec<Elem>>, // sorted neighbor lists
}

impl<'g> CayleyGraph<'g> {
    pub fn new(group: &'g FiniteGroup, gens: &GeneratorSet) -> Self {
        let digraph = CayleyDigraph::new(group, gens);
        Self::from_digraph(&digraph)
    }

    pub fn from_digraph(digraph: &CayleyDigraph<'g>) -> Self {
        let group = digraph.group();
        let mut edges: Vec<(Elem, Elem)> = digraph
            .arcs()
            .iter()
            .map(|arc| {
                if arc.source < arc.target {
                    (arc.source, arc.target)
                } else {
                    (arc.target, arc.source)
                }
            })
            .collect();
        edges.sort();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); group.order()];
        for &(u, v) in &edges {
            adjacency[u.index()].push(v);
            adjacency[v.index()].push(u);
        }
        for list in &mut adjacency {
            list.sort();
        }
        CayleyGraph {
            group,
            gens: digraph.gens().clone(),
            edges,
            adjacency,
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn edges(&self) -> &[(Elem, Elem)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: Elem) -> &[Elem] {
        &self.adjacency[v.index()]
    }

    pub fn has_edge(&self, u: Elem, v: Elem) -> bool {
        self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Common degree of every vertex: 2|A'| - |A' meet A'^-1| for the
    /// non-identity part A' of the connection set. Recounted per vertex;
    /// panics on disagreement, which would be a construction defect.
    pub fn degree_stats(&self) -> GraphDegreeStats {
        let labels = self.gens.non_identity();
        let inverses: Vec<Elem> = labels.iter().map(|&a| self.group.inv(a)).collect();
        let both = labels.iter().filter(|a| inverses.contains(a)).count();
        let expected = 2 * labels.len() - both;
        let regular = self.adjacency.iter().all(|nbrs| nbrs.len() == expected);
        assert!(
            regular,
            "graph is not {expected}-regular; edge construction is defective"
        );
        GraphDegreeStats {
            regular,
            degree: expected,
        }
    }

    /// DOT rendering of the undirected graph. Each edge takes the color
    /// of the first generator that induces it.
    pub fn to_dot(&self, options: &DotOptions) -> Result<String> {
        let labels = self.gens.non_identity();
        let colors = options.colors_for(labels.len())?;
        let mut out = String::from("graph cayley {\n");
        for v in self.group.elements() {
            out.push_str(&format!(
                "  {} [label=\"{}\"];\n",
                v.index(),
                escape(self.group.name(v))
            ));
        }
        for &(u, v) in &self.edges {
            let pos = labels
                .iter()
                .position(|&a| self.group.mul(u, a) == v || self.group.mul(v, a) == u)
                .expect("every edge is induced by some generator");
            out.push_str(&format!(
                "  {} -- {} [color=\"{}\"];\n",
                u.index(),
                v.index(),
                colors[pos]
            ));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigraphDegreeStats {
    pub regular: bool,
    pub in_degree: usize,
    pub out_degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphDegreeStats {
    pub regular: bool,
    pub degree: usize,
}

/// Rendering options for [`CayleyDigraph::to_dot`] and
/// [`CayleyGraph::to_dot`]. Leave `colors` unset to use [`PALETTE`].
#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    pub colors: Option<Vec<String>>,
}

impl DotOptions {
    fn colors_for(&self, needed: usize) -> Result<Vec<String>> {
        let available: Vec<String> = match &self.colors {
            Some(custom) => custom.clone(),
            None => PALETTE.iter().map(|s| s.to_string()).collect(),
        };
        if needed > available.len() {
            return Err(Error::Usage(format!(
                "{needed} generators need {needed} edge colors but only {} are available; \
                 pass a custom color list",
                available.len()
            )));
        }
        Ok(available)
    }
}

fn escape(name: &str) -> String {
    name.replace('\\', "\\\\").replace('"', "\\\"")
}
