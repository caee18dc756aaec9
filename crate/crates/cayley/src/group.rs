//! Finite groups as dense multiplication tables.
//!
//! A group of order `n` stores its elements as indices `0..n` with index 0
//! reserved for the identity. All arithmetic is table lookup, so every
//! operation here is a pure function of the table.

use crate::error::{Error, Result};
use crate::io::{validate_table, ValidationReport};

/// An element of a [`FiniteGroup`], identified by its index into the
/// group's element list. Index 0 is always the identity.
///
/// Elements are only handed out by the group that owns them, so they are
/// valid for that group by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite group given by its full multiplication table.
///
/// Invariants established at construction:
/// - index 0 is a two-sided identity;
/// - every row and column of the table is a permutation of `0..n`;
/// - every element has a two-sided inverse;
/// - the operation is associative (checked unless the trusted
///   constructor is used).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>, // row-major n*n, table[g*n + h] = g*h
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from element names and a square table of indices,
    /// validating all group axioms. The identity must already sit at
    /// index 0 (parsers re-index before calling this).
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(names, table, false)
    }

    /// Like [`FiniteGroup::from_table`] but skips the O(n^3) associativity
    /// check. Meant for tables known to be associative by construction
    /// (closures of permutations, direct products) once the order grows
    /// past a few hundred elements.
    pub fn from_table_trusted(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(names, table, true)
    }

    fn build(names: Vec<String>, table: Vec<Vec<usize>>, skip_assoc: bool) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Usage("a group needs at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Usage(format!(
                "expected a {n}x{n} table to match {n} element names"
            )));
        }
        let report = if skip_assoc {
            validate_table_partial(&table)
        } else {
            validate_table(&table)
        };
        if !report.ok {
            return Err(Error::InvalidGroup(report));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            flat.extend_from_slice(row);
        }
        let inverses = (0..n)
            .map(|g| (0..n).find(|&h| flat[g * n + h] == 0).expect("validated"))
            .collect();
        Ok(FiniteGroup {
            names,
            table: flat,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    /// The element at `index`, or a usage error when out of range.
    pub fn element(&self, index: usize) -> Result<Elem> {
        if index < self.order() {
            Ok(Elem(index))
        } else {
            Err(Error::Usage(format!(
                "element index {index} out of range for a group of order {}",
                self.order()
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(Elem)
    }

    pub fn name(&self, g: Elem) -> &str {
        &self.names[g.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(Elem)
    }

    /// The product g*h.
    ///
    /// Panics if either index is out of range, which can only happen when
    /// an element from a different group is passed in.
    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        let n = self.order();
        assert!(g.0 < n && h.0 < n, "element from another group");
        Elem(self.table[g.0 * n + h.0])
    }

    /// The inverse of g, satisfying mul(g, inv(g)) = e.
    pub fn inv(&self, g: Elem) -> Elem {
        assert!(g.0 < self.order(), "element from another group");
        Elem(self.inverses[g.0])
    }

    /// Smallest k >= 1 with g^k = e.
    pub fn element_order(&self, g: Elem) -> usize {
        let mut power = g;
        let mut k = 1;
        while power != self.identity() {
            power = self.mul(power, g);
            k += 1;
        }
        k
    }

    /// The subgroup generated by `gens`: breadth-first closure starting
    /// from the identity and the generators, multiplying by generators and
    /// their inverses until no new element appears.
    pub fn closure(&self, gens: &GeneratorSet) -> Subgroup {
        let n = self.order();
        let mut steps: Vec<Elem> = Vec::with_capacity(2 * gens.len());
        for &a in gens.members() {
            steps.push(a);
            steps.push(self.inv(a));
        }
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(Elem(0));
        for &a in gens.members() {
            if !seen[a.0] {
                seen[a.0] = true;
                queue.push_back(a);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &s in &steps {
                let y = self.mul(x, s);
                if !seen[y.0] {
                    seen[y.0] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Elem> = (0..n).filter(|&i| seen[i]).map(Elem).collect();
        debug_assert_eq!(n % elements.len(), 0);
        Subgroup {
            elements,
            generated_from: gens.clone(),
        }
    }

    /// Left cosets g*H, reported as a partition: blocks ordered by their
    /// minimal element, elements ascending within each block.
    pub fn left_cosets(&self, h: &Subgroup) -> Vec<Vec<Elem>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut blocks = Vec::with_capacity(n / h.order());
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut block: Vec<Elem> = h.elements().iter().map(|&x| self.mul(Elem(g), x)).collect();
            block.sort();
            block.dedup();
            debug_assert_eq!(block.len(), h.order());
            for &x in &block {
                assigned[x.0] = true;
            }
            blocks.push(block);
        }
        blocks
    }

    /// The index [G:H], i.e. the number of left cosets of H in G.
    pub fn index_of(&self, h: &Subgroup) -> usize {
        self.order() / h.order()
    }
}

/// An ordered, duplicate-free set of group elements used as the
/// connection set of a Cayley graph. Insertion order is remembered so
/// generator colors and traces stay stable.
///
/// The identity may be a member; edge building ignores it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    members: Vec<Elem>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts an element, returning false when it was already present.
    pub fn insert(&mut self, g: Elem) -> bool {
        if self.members.contains(&g) {
            false
        } else {
            self.members.push(g);
            true
        }
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.members.contains(&g)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    /// A copy with one member removed.
    pub fn without(&self, g: Elem) -> Self {
        GeneratorSet {
            members: self.members.iter().copied().filter(|&m| m != g).collect(),
        }
    }

    /// Members with the identity dropped, preserving order.
    pub fn non_identity(&self) -> Vec<Elem> {
        self.members
            .iter()
            .copied()
            .filter(|&m| m != Elem(0))
            .collect()
    }
}

impl FromIterator<Elem> for GeneratorSet {
    fn from_iter<T: IntoIterator<Item = Elem>>(iter: T) -> Self {
        let mut set = GeneratorSet::new();
        for g in iter {
            set.insert(g);
        }
        set
    }
}

/// A subset of a group closed under multiplication and inverses,
/// remembering the generator set it was produced from.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<Elem>, // sorted ascending
    generated_from: GeneratorSet,
}

impl Subgroup {
    /// Wraps an explicit element set after checking it really is a
    /// subgroup: contains the identity and is closed under the table.
    /// (Closure under inverses follows in a finite group.)
    pub fn from_elements(
        group: &FiniteGroup,
        elements: impl IntoIterator<Item = Elem>,
    ) -> Result<Self> {
        let mut elems: Vec<Elem> = elements.into_iter().collect();
        elems.sort();
        elems.dedup();
        if elems.first() != Some(&Elem(0)) {
            return Err(Error::Domain("subset does not contain the identity".into()));
        }
        for &g in &elems {
            for &h in &elems {
                let p = group.mul(g, h);
                if elems.binary_search(&p).is_err() {
                    return Err(Error::Domain(format!(
                        "subset is not closed: {} * {} = {} lies outside it",
                        group.name(g),
                        group.name(h),
                        group.name(p)
                    )));
                }
            }
        }
        let generated_from = elems.iter().copied().collect();
        Ok(Subgroup {
            elements: elems,
            generated_from,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn generated_from(&self) -> &GeneratorSet {
        &self.generated_from
    }

    /// The subgroup's elements viewed as a generator set.
    pub fn as_generator_set(&self) -> GeneratorSet {
        self.elements.iter().copied().collect()
    }
}

/// Axiom checks that skip associativity; see
/// [`FiniteGroup::from_table_trusted`].
fn validate_table_partial(table: &[Vec<usize>]) -> ValidationReport {
    crate::io::validate_table_with(table, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_cayley_table;

    pub(crate) fn paper_group() -> FiniteGroup {
        parse_cayley_table(include_str!("../../../fixtures/table1.txt")).unwrap()
    }

    fn gens(group: &FiniteGroup, names: &[&str]) -> GeneratorSet {
        names.iter().map(|n| group.by_name(n).unwrap()).collect()
    }

    fn elem_names(group: &FiniteGroup, elems: &[Elem]) -> Vec<String> {
        elems.iter().map(|&e| group.name(e).to_string()).collect()
    }

    #[test]
    fn multiply_from_table() {
        let g = paper_group();
        let b = g.by_name("b").unwrap();
        let ab = g.by_name("ab").unwrap();
        let c = g.by_name("c").unwrap();
        let cc = g.by_name("cc").unwrap();
        assert_eq!(g.mul(b, ab), g.by_name("a").unwrap());
        assert_eq!(g.mul(c, cc), g.identity());
        for x in g.elements() {
            assert_eq!(g.mul(g.identity(), x), x);
            assert_eq!(g.mul(x, g.identity()), x);
        }
    }

    #[test]
    fn inverses_from_table() {
        let g = paper_group();
        assert_eq!(g.inv(g.identity()), g.identity());
        let b = g.by_name("b").unwrap();
        assert_eq!(g.inv(b), b);
        let c = g.by_name("c").unwrap();
        assert_eq!(g.inv(c), g.by_name("cc").unwrap());
    }

    #[test]
    fn element_out_of_range_is_usage_error() {
        let g = paper_group();
        assert!(g.element(11).is_ok());
        assert!(matches!(g.element(12), Err(Error::Usage(_))));
    }

    #[test]
    #[should_panic(expected = "element from another group")]
    fn mul_panics_on_foreign_element() {
        let g = paper_group();
        g.mul(Elem(99), Elem(0));
    }

    #[test]
    fn closure_examples() {
        let g = paper_group();
        assert_eq!(
            elem_names(&g, g.closure(&GeneratorSet::new()).elements()),
            ["e"]
        );
        assert_eq!(
            elem_names(&g, g.closure(&gens(&g, &["b"])).elements()),
            ["e", "b"]
        );
        assert_eq!(
            elem_names(&g, g.closure(&gens(&g, &["b", "a"])).elements()),
            ["e", "a", "b", "ab"]
        );
        assert_eq!(
            elem_names(&g, g.closure(&gens(&g, &["c"])).elements()),
            ["e", "c", "cc"]
        );
    }

    #[test]
    fn closure_matches_naive_smallest_closed_superset() {
        // Independent route: intersect every closed subset containing the
        // generators, enumerated over all 2^n subsets.
        let g = paper_group();
        let n = g.order();
        for mask in [0usize, 0b100, 0b110, 0b10000, 0b10100, 0b1010] {
            let a: GeneratorSet = (0..n).filter(|i| mask >> i & 1 == 1).map(Elem).collect();
            let expect = naive_closure(&g, &a);
            let got: Vec<usize> = g.closure(&a).elements().iter().map(|e| e.0).collect();
            assert_eq!(got, expect, "mask {mask:b}");
        }
    }

    fn naive_closure(g: &FiniteGroup, a: &GeneratorSet) -> Vec<usize> {
        let n = g.order();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if !set.contains(&0) || a.iter().any(|x| !set.contains(&x.0)) {
                continue;
            }
            let closed = set.iter().all(|&x| {
                set.iter()
                    .all(|&y| set.contains(&g.mul(Elem(x), Elem(y)).0))
            });
            if closed && best.as_ref().is_none_or(|b| set.len() < b.len()) {
                best = Some(set);
            }
        }
        best.unwrap()
    }

    #[test]
    fn cosets_of_order_two_subgroup() {
        let g = paper_group();
        let h = g.closure(&gens(&g, &["b"]));
        let blocks = g.left_cosets(&h);
        assert_eq!(blocks.len(), 6);
        assert!(blocks.iter().all(|b| b.len() == 2));
        let shown: Vec<Vec<String>> = blocks.iter().map(|b| elem_names(&g, b)).collect();
        assert_eq!(shown[0], ["e", "b"]);
        assert_eq!(shown[1], ["a", "ab"]);
        assert_eq!(shown[2], ["c", "abc"]);
        assert_eq!(shown[3], ["ac", "bc"]);
        assert_eq!(shown[4], ["cc", "acc"]);
        assert_eq!(shown[5], ["bcc", "abcc"]);
    }

    #[test]
    fn cosets_degenerate_cases() {
        let g = paper_group();
        let whole = Subgroup::from_elements(&g, g.elements()).unwrap();
        assert_eq!(g.left_cosets(&whole).len(), 1);
        let trivial = g.closure(&GeneratorSet::new());
        let blocks = g.left_cosets(&trivial);
        assert_eq!(blocks.len(), 12);
        assert!(blocks.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn index_examples() {
        let g = paper_group();
        let whole = Subgroup::from_elements(&g, g.elements()).unwrap();
        assert_eq!(g.index_of(&whole), 1);
        assert_eq!(g.index_of(&g.closure(&gens(&g, &["c"]))), 4);
        assert_eq!(g.index_of(&g.closure(&gens(&g, &["b", "a"]))), 3);
    }

    #[test]
    fn subgroup_from_elements_rejects_unclosed_sets() {
        let g = paper_group();
        let c = g.by_name("c").unwrap();
        let err = Subgroup::from_elements(&g, [g.identity(), c]).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let err = Subgroup::from_elements(&g, [c]).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn generator_set_dedups_preserving_order() {
        let g = paper_group();
        let b = g.by_name("b").unwrap();
        let c = g.by_name("c").unwrap();
        let set: GeneratorSet = [c, b, c, b].into_iter().collect();
        assert_eq!(set.members(), &[c, b]);
        assert_eq!(set.without(c).members(), &[b]);
    }

    #[test]
    fn element_orders_in_paper_group() {
        let g = paper_group();
        let orders: Vec<usize> = g.elements().map(|e| g.element_order(e)).collect();
        assert_eq!(orders.iter().filter(|&&k| k == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&k| k == 3).count(), 8);
        assert_eq!(orders[0], 1);
    }
}
