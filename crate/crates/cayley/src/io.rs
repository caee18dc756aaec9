//! Parsing, serialization, standard families, and axiom validation.
//!
//! The table file format is plain UTF-8 text: a header line of element
//! names followed by one line per row of the multiplication table, where
//! row `i`, token `j` names the product (element i)*(element j). Lines
//! starting with `#` and blank lines are ignored. Names must not contain
//! whitespace.
//!
//! The permutation file format is one permutation per line in cycle
//! notation, e.g. `(1 2 3)(4 5)`, with an optional leading `degree N`
//! line; `()` is the identity.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

/// Default ceiling on the order of a group generated from permutation
/// input, so a careless generator set cannot blow up the closure.
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// One of the group laws checked by [`validate_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Identity,
    LatinRow,
    LatinCol,
    Inverse,
    Associativity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Identity => "identity",
            Law::LatinRow => "latin-row",
            Law::LatinCol => "latin-col",
            Law::Inverse => "inverse",
            Law::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

/// A broken law together with up to three element indices pinning down
/// where it breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

/// Outcome of checking a candidate multiplication table against the
/// group axioms. At most three witnesses are reported per law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let witness = v
                .witness
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            write!(f, "\n  {} (witness: {})", v.law, witness)?;
        }
        Ok(())
    }
}

/// Checks identity, Latin rows/columns, inverses, and associativity for a
/// square table of indices, taking index 0 as the identity. Reports the
/// first three witnesses per law.
///
/// Panics if the table is not square or a cell is out of range.
pub fn validate_table(table: &[Vec<usize>]) -> ValidationReport {
    validate_table_with(table, true)
}

/// [`validate_table`] with associativity optionally skipped; the O(n^3)
/// sweep dominates for large trusted tables.
pub fn validate_table_with(table: &[Vec<usize>], check_assoc: bool) -> ValidationReport {
    let n = table.len();
    assert!(
        table.iter().all(|row| row.len() == n),
        "validate_table expects a square table"
    );
    assert!(
        table.iter().flatten().all(|&x| x < n),
        "table cell out of range"
    );

    const MAX_WITNESSES: usize = 3;
    let mut violations = Vec::new();
    let push = |violations: &mut Vec<Violation>, law: Law, witness: Vec<usize>| {
        if violations.iter().filter(|v| v.law == law).count() < MAX_WITNESSES {
            violations.push(Violation { law, witness });
        }
    };

    for g in 0..n {
        if table[0][g] != g || table[g][0] != g {
            push(&mut violations, Law::Identity, vec![g]);
        }
    }
    for g in 0..n {
        let mut seen = vec![usize::MAX; n];
        for h in 0..n {
            let v = table[g][h];
            if seen[v] != usize::MAX {
                push(&mut violations, Law::LatinRow, vec![g, seen[v], h]);
                break;
            }
            seen[v] = h;
        }
    }
    for h in 0..n {
        let mut seen = vec![usize::MAX; n];
        for g in 0..n {
            let v = table[g][h];
            if seen[v] != usize::MAX {
                push(&mut violations, Law::LatinCol, vec![h, seen[v], g]);
                break;
            }
            seen[v] = g;
        }
    }
    for g in 0..n {
        let right: Vec<usize> = (0..n).filter(|&h| table[g][h] == 0).collect();
        let left: Vec<usize> = (0..n).filter(|&h| table[h][g] == 0).collect();
        if right.len() != 1 || left.len() != 1 || right[0] != left[0] {
            push(&mut violations, Law::Inverse, vec![g]);
        }
    }
    if check_assoc {
        'outer: for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        push(&mut violations, Law::Associativity, vec![g, h, k]);
                        if violations
                            .iter()
                            .filter(|v| v.law == Law::Associativity)
                            .count()
                            >= MAX_WITNESSES
                        {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Parses the Cayley-table file format into a validated group. The
/// identity is re-indexed to position 0 when the header does not already
/// list it first; all other elements keep their header order.
pub fn parse_cayley_table(text: &str) -> Result<FiniteGroup> {
    parse_cayley_table_with(text, false)
}

/// [`parse_cayley_table`] for trusted input: skips the associativity
/// check, intended for tables of order beyond a few hundred.
pub fn parse_cayley_table_trusted(text: &str) -> Result<FiniteGroup> {
    parse_cayley_table_with(text, true)
}

fn parse_cayley_table_with(text: &str, trusted: bool) -> Result<FiniteGroup> {
    let mut lines = significant_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        message: "empty input: expected a header line of element names".into(),
    })?;
    let names: Vec<String> = header.split_whitespace().map(str::to_string).collect();
    let n = names.len();
    let mut index_of = HashMap::with_capacity(n);
    for (i, name) in names.iter().enumerate() {
        if index_of.insert(name.clone(), i).is_some() {
            return Err(Error::Parse {
                line: header_no,
                message: format!("duplicate element name '{name}' in header"),
            });
        }
    }

    let mut table: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {n} table rows, found {}", table.len()),
        })?;
        let mut row = Vec::with_capacity(n);
        for token in line.split_whitespace() {
            match index_of.get(token) {
                Some(&i) => row.push(i),
                None => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("unknown element name '{token}'"),
                    })
                }
            }
        }
        if row.len() != n {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {n} entries in this row, found {}", row.len()),
            });
        }
        table.push(row);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: "unexpected content after the table".into(),
        });
    }

    // Locate the two-sided identity and move it to index 0.
    let identity = (0..n).find(|&x| (0..n).all(|g| table[x][g] == g && table[g][x] == g));
    let (names, table) = match identity {
        Some(0) | None => (names, table),
        Some(x) => reindex_identity_first(names, table, x),
    };

    if trusted {
        FiniteGroup::from_table_trusted(names, table)
    } else {
        FiniteGroup::from_table(names, table)
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn reindex_identity_first(
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
) -> (Vec<String>, Vec<Vec<usize>>) {
    let n = names.len();
    let renum = |old: usize| -> usize {
        if old == identity {
            0
        } else if old < identity {
            old + 1
        } else {
            old
        }
    };
    let mut new_names = vec![String::new(); n];
    for (old, name) in names.into_iter().enumerate() {
        new_names[renum(old)] = name;
    }
    let mut new_table = vec![vec![0; n]; n];
    for g in 0..n {
        for h in 0..n {
            new_table[renum(g)][renum(h)] = renum(table[g][h]);
        }
    }
    (new_names, new_table)
}

/// Renders a group back into the table file format. Inverse of
/// [`parse_cayley_table`] on groups whose identity sits at index 0,
/// which construction guarantees.
pub fn serialize_cayley_table(group: &FiniteGroup) -> String {
    debug_assert!(
        group
            .names()
            .iter()
            .all(|n| !n.contains(char::is_whitespace)),
        "names with whitespace cannot round-trip"
    );
    let mut out = String::new();
    out.push_str(&group.names().join(" "));
    out.push('\n');
    for g in group.elements() {
        let row: Vec<&str> = group
            .elements()
            .map(|h| group.name(group.mul(g, h)))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// A permutation given as disjoint cycles over points `1..=degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGen {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl PermutationGen {
    /// The one-line mapping over 0-based points: `mapping[i]` is the image
    /// of point `i`.
    fn mapping(&self, degree: usize) -> Vec<usize> {
        let mut map: Vec<usize> = (0..degree).collect();
        for cycle in &self.cycles {
            for (i, &p) in cycle.iter().enumerate() {
                map[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        map
    }
}

/// Parses permutation generators and returns the group they generate,
/// realized as a multiplication table by breadth-first closure. Element 0
/// is the identity; the rest follow in discovery order (generators taken
/// in file order). Element names are canonical cycle strings with dots,
/// e.g. `(1.2.3)(4.5)`, so they stay whitespace-free.
pub fn parse_permutation_generators(text: &str) -> Result<FiniteGroup> {
    parse_permutation_generators_with_cap(text, DEFAULT_CLOSURE_CAP)
}

/// [`parse_permutation_generators`] with an explicit closure cap.
pub fn parse_permutation_generators_with_cap(text: &str, cap: usize) -> Result<FiniteGroup> {
    let mut declared_degree: Option<usize> = None;
    let mut gens: Vec<(usize, PermutationGen)> = Vec::new();
    for (idx, (line_no, line)) in significant_lines(text).enumerate() {
        if idx == 0 && line.starts_with("degree") {
            let rest = line["degree".len()..].trim();
            let n: usize = rest.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad degree '{rest}'"),
            })?;
            if n == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    message: "degree must be at least 1".into(),
                });
            }
            declared_degree = Some(n);
            continue;
        }
        gens.push((line_no, parse_cycles(line, line_no)?));
    }

    let max_point = gens.iter().map(|(_, g)| g.degree).max().unwrap_or(0);
    let degree = match declared_degree {
        Some(n) => {
            if max_point > n {
                let (line_no, _) = gens.iter().find(|(_, g)| g.degree > n).unwrap();
                return Err(Error::Parse {
                    line: *line_no,
                    message: format!("cycle point exceeds declared degree {n}"),
                });
            }
            n
        }
        None => max_point.max(1),
    };

    let mappings: Vec<Vec<usize>> = gens.iter().map(|(_, g)| g.mapping(degree)).collect();
    realize_permutation_group(degree, &mappings, cap)
}

fn parse_cycles(line: &str, line_no: usize) -> Result<PermutationGen> {
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch != '(' {
            return Err(err(format!("expected '(' at column {}", pos + 1)));
        }
        chars.next();
        let mut cycle = Vec::new();
        let mut digits = String::new();
        loop {
            match chars.next() {
                Some((_, c)) if c.is_ascii_digit() => digits.push(c),
                Some((_, c)) if c.is_whitespace() || c == ')' => {
                    if !digits.is_empty() {
                        let p: usize = digits.parse().map_err(|_| err("bad point".into()))?;
                        if p == 0 {
                            return Err(err("cycle points are 1-based".into()));
                        }
                        if seen.contains(&p) {
                            return Err(err(format!("point {p} appears in two cycles")));
                        }
                        seen.push(p);
                        cycle.push(p);
                        digits.clear();
                    }
                    if c == ')' {
                        break;
                    }
                }
                Some((pos, c)) => {
                    return Err(err(format!(
                        "unexpected character '{c}' at column {}",
                        pos + 1
                    )))
                }
                None => return Err(err("unclosed cycle".into())),
            }
        }
        if cycle.len() >= 2 {
            cycles.push(cycle);
        }
    }
    let degree = seen.iter().copied().max().unwrap_or(0);
    Ok(PermutationGen { degree, cycles })
}

fn realize_permutation_group(
    degree: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<FiniteGroup> {
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
        // apply q, then p
        (0..degree).map(|i| p[q[i]]).collect()
    };

    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut cursor = 0;
    while cursor < elements.len() {
        for q in generators {
            let next = compose(&elements[cursor], q);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::Resource(format!(
                        "generated group exceeds the closure cap of {cap} elements"
                    )));
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }

    let n = elements.len();
    let names = elements.iter().map(|p| cycle_name(p)).collect();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = index[&compose(&elements[i], &elements[j])];
        }
    }
    finish_table(names, table)
}

/// Canonical cycle string of a 0-based mapping: cycles ordered by their
/// smallest point, each starting there, fixed points dropped, points
/// printed 1-based and dot-separated. The identity is `()`.
fn cycle_name(mapping: &[usize]) -> String {
    let mut out = String::new();
    let mut visited = vec![false; mapping.len()];
    for start in 0..mapping.len() {
        if visited[start] || mapping[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut cur = mapping[start];
        while cur != start {
            visited[cur] = true;
            cycle.push(cur);
            cur = mapping[cur];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|p| (p + 1).to_string())
                .collect::<Vec<_>>()
                .join("."),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Full validation below order 512, associativity skipped above; the
/// builders in this module only produce associative tables.
fn finish_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    if names.len() <= 512 {
        FiniteGroup::from_table(names, table)
    } else {
        FiniteGroup::from_table_trusted(names, table)
    }
}

/// Cyclic group of order `n`, elements ordered as powers of the
/// generator: e, g, g2, ...
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Usage("cyclic group order must be at least 1".into()));
    }
    let names = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    finish_table(names, table)
}

/// Dihedral group of order 2n (n >= 3): rotations e, r, r2, ... followed
/// by reflections s, sr, sr2, ... where sr{k} means s*r^k.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::Usage(
            "dihedral family needs n >= 3 (use klein4 for order 4)".into(),
        ));
    }
    let name = |flip: usize, k: usize| match (flip, k) {
        (0, 0) => "e".to_string(),
        (0, 1) => "r".to_string(),
        (0, _) => format!("r{k}"),
        (1, 0) => "s".to_string(),
        (1, 1) => "sr".to_string(),
        (_, _) => format!("sr{k}"),
    };
    let names = (0..2 * n).map(|i| name(i / n, i % n)).collect();
    // (s^a r^j)(s^b r^k) = s^(a+b) r^(j*(-1)^b + k)
    let table = (0..2 * n)
        .map(|i| {
            let (a, j) = (i / n, i % n);
            (0..2 * n)
                .map(|l| {
                    let (b, k) = (l / n, l % n);
                    let flip = (a + b) % 2;
                    let rot = if b == 1 { (n - j + k) % n } else { (j + k) % n };
                    flip * n + rot
                })
                .collect()
        })
        .collect();
    finish_table(names, table)
}

/// Symmetric group on `n` points (1 <= n <= 6), elements in lexicographic
/// one-line order, named by their cycle decomposition.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::Usage("symmetric family supports n in 1..=6".into()));
    }
    let mut perms = vec![(0..n).collect::<Vec<usize>>()];
    while let Some(next) = next_lex_permutation(perms.last().unwrap()) {
        perms.push(next);
    }
    let index: HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    let order = perms.len();
    let mut table = vec![vec![0; order]; order];
    for i in 0..order {
        for j in 0..order {
            let prod: Vec<usize> = (0..n).map(|x| perms[i][perms[j][x]]).collect();
            table[i][j] = index[&prod];
        }
    }
    finish_table(names, table)
}

fn next_lex_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let mut p = p.to_vec();
    let i = (0..p.len().saturating_sub(1))
        .rev()
        .find(|&i| p[i] < p[i + 1])?;
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    Some(p)
}

/// The Klein four-group with elements e, a, b, ab.
pub fn klein4() -> Result<FiniteGroup> {
    let names = ["e", "a", "b", "ab"].map(String::from).to_vec();
    let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    FiniteGroup::from_table(names, table)
}

/// Direct product of two groups: elements are pairs in lexicographic
/// order, named `(x.y)`.
pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Result<FiniteGroup> {
    let (n1, n2) = (left.order(), right.order());
    let mut names = Vec::with_capacity(n1 * n2);
    for i in left.elements() {
        for j in right.elements() {
            names.push(format!("({}.{})", left.name(i), right.name(j)));
        }
    }
    let pair = |i: usize, j: usize| i * n2 + j;
    let mut table = vec![vec![0; n1 * n2]; n1 * n2];
    for i1 in left.elements() {
        for j1 in right.elements() {
            for i2 in left.elements() {
                for j2 in right.elements() {
                    table[pair(i1.index(), j1.index())][pair(i2.index(), j2.index())] =
                        pair(left.mul(i1, i2).index(), right.mul(j1, j2).index());
                }
            }
        }
    }
    finish_table(names, table)
}

/// Resolves comma-separated element names against a group.
pub fn resolve_names(group: &FiniteGroup, names: &str) -> Result<Vec<Elem>> {
    names
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            group
                .by_name(s)
                .ok_or_else(|| Error::Domain(format!("no element named '{s}' in this group")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1: &str = include_str!("../../../fixtures/table1.txt");

    #[test]
    fn parse_paper_table() {
        let g = parse_cayley_table(TABLE1).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.name(g.identity()), "e");
        let orders: Vec<usize> = g.elements().map(|e| g.element_order(e)).collect();
        assert_eq!(orders.iter().filter(|&&k| k == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&k| k == 3).count(), 8);
    }

    #[test]
    fn parse_trivial_table() {
        let g = parse_cayley_table("e\ne\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn parse_reindexes_identity_to_front() {
        // z2 with the identity listed second in the header.
        let text = "x e\ne x\nx e\n";
        let g = parse_cayley_table(text).unwrap();
        assert_eq!(g.name(g.identity()), "e");
        assert_eq!(g.names(), &["e".to_string(), "x".to_string()]);
        let x = g.by_name("x").unwrap();
        assert_eq!(g.mul(x, x), g.identity());
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_cayley_table("e a\ne a\na\n").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("expected 2 entries"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_cayley_table("e a\ne q\na e\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn broken_latin_cell_is_reported_for_its_row() {
        // Swap one cell of the paper table: row "b" gets a duplicate.
        let mut lines: Vec<String> = TABLE1.lines().map(str::to_string).collect();
        // Row for b is the 3rd table row; corrupt its second entry.
        let row = lines
            .iter()
            .position(|l| l.starts_with("b "))
            .expect("row for b");
        let mut tokens: Vec<&str> = lines[row].split_whitespace().collect();
        tokens[1] = "b";
        lines[row] = tokens.join(" ");
        let err = parse_cayley_table(&lines.join("\n")).unwrap_err();
        match err {
            Error::InvalidGroup(report) => {
                assert!(!report.ok);
                assert!(report.has(Law::LatinRow));
                let v = report
                    .violations
                    .iter()
                    .find(|v| v.law == Law::LatinRow)
                    .unwrap();
                assert_eq!(v.witness[0], 2, "witness names the corrupted row");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn zeroed_row_breaks_latin_and_inverse_laws() {
        let mut table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        table[2] = vec![0; 4];
        let report = validate_table(&table);
        assert!(!report.ok);
        assert!(report.has(Law::LatinRow));
        assert!(report.has(Law::Inverse));
    }

    #[test]
    fn validate_accepts_small_groups() {
        let z2 = vec![vec![0, 1], vec![1, 0]];
        assert!(validate_table(&z2).ok);
        let g = parse_cayley_table(TABLE1).unwrap();
        let n = g.order();
        let table: Vec<Vec<usize>> = g
            .elements()
            .map(|a| g.elements().map(|b| g.mul(a, b).index()).collect())
            .collect();
        assert_eq!(table.len(), n);
        assert!(validate_table(&table).ok);
    }

    #[test]
    fn associativity_violation_found() {
        // Order-5 loop with identity and two-sided inverses in which every
        // element is an involution; no group of order 5 looks like that,
        // so associativity has to fail.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let report = validate_table(&table);
        assert!(report.has(Law::Associativity));
        let partial = validate_table_with(&table, false);
        assert!(partial.ok, "only associativity fails for this loop");
    }

    #[test]
    fn serialize_round_trips() {
        for g in [
            parse_cayley_table(TABLE1).unwrap(),
            cyclic(7).unwrap(),
            dihedral(4).unwrap(),
            symmetric(3).unwrap(),
            klein4().unwrap(),
        ] {
            let text = serialize_cayley_table(&g);
            let back = parse_cayley_table(&text).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(parse_permutation_generators("(1 2)").unwrap().order(), 2);
        let s3 = parse_permutation_generators("(1 2 3)\n(1 2)\n").unwrap();
        assert_eq!(s3.order(), 6);
        let a4 = parse_permutation_generators("(1 2)(3 4)\n(1 2 3)\n").unwrap();
        assert_eq!(a4.order(), 12);
    }

    #[test]
    fn permutation_identity_and_degree_lines() {
        let g = parse_permutation_generators("degree 4\n()\n").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.name(g.identity()), "()");
        let err = parse_permutation_generators("degree 2\n(1 2 3)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn permutation_overlapping_cycles_rejected() {
        let err = parse_permutation_generators("(1 2)(2 3)\n").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 1);
                assert!(message.contains("two cycles"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn permutation_closure_cap_is_enforced() {
        let err = parse_permutation_generators_with_cap("(1 2 3 4 5)\n(1 2)\n", 30).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn permutation_output_passes_validation() {
        let g = parse_permutation_generators("(1 2 3 4)\n(1 2)\n").unwrap();
        assert_eq!(g.order(), 24);
        let table: Vec<Vec<usize>> = g
            .elements()
            .map(|a| g.elements().map(|b| g.mul(a, b).index()).collect())
            .collect();
        assert!(validate_table(&table).ok);
    }

    #[test]
    fn standard_families() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(6).unwrap().order(), 6);
        assert_eq!(dihedral(3).unwrap().order(), 6);
        assert_eq!(dihedral(6).unwrap().order(), 12);
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert!(cyclic(0).is_err());
        assert!(dihedral(2).is_err());
        assert!(symmetric(7).is_err());
    }

    #[test]
    fn klein_four_via_direct_product() {
        let c2 = cyclic(2).unwrap();
        let v = direct_product(&c2, &c2).unwrap();
        assert_eq!(v.order(), 4);
        for g in v.elements() {
            assert_eq!(v.mul(g, g), v.identity());
        }
        let k = klein4().unwrap();
        for g in k.elements() {
            assert_eq!(k.mul(g, g), k.identity());
        }
    }

    #[test]
    fn dihedral_relations_hold() {
        let d = dihedral(5).unwrap();
        let r = d.by_name("r").unwrap();
        let s = d.by_name("s").unwrap();
        assert_eq!(d.element_order(r), 5);
        assert_eq!(d.element_order(s), 2);
        // s r s = r^-1
        let srs = d.mul(d.mul(s, r), s);
        assert_eq!(srs, d.inv(r));
    }

    #[test]
    fn resolve_names_reports_unknowns() {
        let g = parse_cayley_table(TABLE1).unwrap();
        let elems = resolve_names(&g, "b, c").unwrap();
        assert_eq!(elems.len(), 2);
        assert!(matches!(resolve_names(&g, "b,zz"), Err(Error::Domain(_))));
    }
}
