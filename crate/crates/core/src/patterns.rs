//! Forbidden families and their containment tests.

use std::fmt;
use std::str::FromStr;

use crate::constructions as cons;
use crate::graphs::{EdgeKey, IndexedGraph, Matcher, MultiHypergraph, VertexSet};
use crate::{Error, Result};

/// A forbidden family `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// An explicit list of graphs.
    Finite(Vec<MultiHypergraph>),
    /// Cycles of length at least three. Parallel edges are not 2-cycles.
    AllCycles,
    /// `C_4, C_6, ...`
    EvenCycles,
    OddCycles,
    Clique(usize),
    /// The path with `t` edges.
    Path(usize),
    /// `P_1 ∪ P_2`.
    StarUnionEdge,
    /// `{P_3, K_3}`.
    P3K3,
    /// One `r`-edge with a 1-uniform loop at each of its vertices.
    Dumbbell(usize),
    /// The 1-uniform graph with degree sequence `d_1 >= .. >= d_t`.
    OneUniform(Vec<u32>),
}

/// Closed descriptions of the `H`-free graphs that the fast solvers use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeCharacterization {
    /// Free graphs are matchings, stars, and subgraphs of `K_4`.
    MatchingStarOrK4,
    /// Free graphs are vertex-disjoint unions of triangles and stars.
    TrianglesAndStars,
    /// Free graphs are vertex-disjoint unions of stars.
    Stars,
    /// Free graphs are forests (parallel edges allowed).
    Forest,
    /// Free graphs have loop profile not dominating `d`.
    LoopProfile(Vec<u32>),
}

impl Pattern {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.into()));
        match self {
            Pattern::Finite(list) => {
                if list.is_empty() {
                    return bad("finite family must be nonempty");
                }
                if list.iter().any(|h| h.edge_count() == 0) {
                    return bad("family members must have at least one edge");
                }
            }
            Pattern::Clique(t) if *t < 2 => return bad("clique order must be at least 2"),
            Pattern::Path(t) if *t < 1 => return bad("path length must be at least 1"),
            Pattern::Dumbbell(r) if *r < 2 => return bad("dumbbell edge size must be at least 2"),
            Pattern::OneUniform(d) => {
                if d.is_empty() || d.contains(&0) {
                    return bad("degree sequence entries must be positive");
                }
                if d.windows(2).any(|w| w[0] < w[1]) {
                    return bad("degree sequence must be nonincreasing");
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// The members of a finite family. Infinite families return `None`.
    pub fn members(&self) -> Option<Vec<MultiHypergraph>> {
        Some(match self {
            Pattern::Finite(list) => list.clone(),
            Pattern::Clique(t) => vec![cons::clique(*t)],
            Pattern::Path(t) => vec![cons::path(*t)],
            Pattern::StarUnionEdge => vec![cons::star_union_edge()],
            Pattern::P3K3 => vec![cons::path(3), cons::clique(3)],
            Pattern::Dumbbell(r) => vec![cons::dumbbell(*r)],
            Pattern::OneUniform(d) => vec![cons::one_uniform(d)],
            Pattern::AllCycles | Pattern::EvenCycles | Pattern::OddCycles => return None,
        })
    }

    /// Whether every member is a simple graph (no parallel edges, no
    /// repeated vertex inside an edge, 1-uniform loops allowed).
    pub fn members_simple(&self) -> bool {
        match self.members() {
            Some(ms) => ms.iter().all(|h| h.is_simple()),
            None => true,
        }
    }

    /// Whether every member only uses 2-edges with distinct endpoints.
    pub fn is_graph_family(&self) -> bool {
        match self {
            Pattern::AllCycles | Pattern::EvenCycles | Pattern::OddCycles => true,
            _ => self
                .members()
                .unwrap()
                .iter()
                .all(|h| h.edges().all(|(k, _)| k.len() == 2 && !k.has_repeat())),
        }
    }

    pub fn free_characterization(&self) -> Option<FreeCharacterization> {
        Some(match self {
            Pattern::StarUnionEdge => FreeCharacterization::MatchingStarOrK4,
            Pattern::Path(3) => FreeCharacterization::TrianglesAndStars,
            Pattern::P3K3 => FreeCharacterization::Stars,
            Pattern::AllCycles => FreeCharacterization::Forest,
            Pattern::OneUniform(d) => FreeCharacterization::LoopProfile(d.clone()),
            _ => return None,
        })
    }

    pub fn tester(&self) -> Tester {
        let kind = match self {
            Pattern::AllCycles => Kind::AllCycles,
            Pattern::EvenCycles => Kind::EvenCycles,
            Pattern::OddCycles => Kind::OddCycles,
            Pattern::Clique(t) => Kind::Clique(*t),
            Pattern::Dumbbell(r) => Kind::Dumbbell(*r),
            Pattern::OneUniform(d) => Kind::OneUniform(d.clone()),
            _ => Kind::Members(self.members().unwrap().iter().map(Matcher::new).collect()),
        };
        Tester { kind }
    }

    /// Whether `f` contains some member of the family.
    pub fn family_contains(&self, f: &MultiHypergraph) -> bool {
        self.tester().contains(&IndexedGraph::from_graph(f))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Finite(list) => write!(f, "family[{}]", list.len()),
            Pattern::AllCycles => f.write_str("cycles"),
            Pattern::EvenCycles => f.write_str("even-cycles"),
            Pattern::OddCycles => f.write_str("odd-cycles"),
            Pattern::Clique(t) => write!(f, "K{t}"),
            Pattern::Path(t) => write!(f, "P{t}"),
            Pattern::StarUnionEdge => f.write_str("P1uP2"),
            Pattern::P3K3 => f.write_str("P3K3"),
            Pattern::Dumbbell(r) => write!(f, "dumbbell{r}"),
            Pattern::OneUniform(d) => {
                let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "oneuniform:{}", s.join(","))
            }
        }
    }
}

/// Parses the named pattern literals. Graph-file literals (`file:`,
/// `family:`) need I/O and are handled by the command line layer.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        let num = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad pattern literal `{s}`")))
        };
        let p = match s {
            "cycles" => Pattern::AllCycles,
            "even-cycles" => Pattern::EvenCycles,
            "odd-cycles" => Pattern::OddCycles,
            "P1uP2" => Pattern::StarUnionEdge,
            "P3K3" => Pattern::P3K3,
            _ => {
                if let Some(rest) = s.strip_prefix("oneuniform:") {
                    let mut d = parse_sequence(rest)?;
                    d.sort_unstable_by(|a, b| b.cmp(a));
                    Pattern::OneUniform(d)
                } else if let Some(rest) = s.strip_prefix("dumbbell") {
                    Pattern::Dumbbell(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('K') {
                    Pattern::Clique(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('P') {
                    Pattern::Path(num(rest)?)
                } else {
                    return Err(Error::InvalidArgument(format!("unknown pattern `{s}`")));
                }
            }
        };
        p.validate()?;
        Ok(p)
    }
}

/// Parses `3,2,1` into a sequence.
pub fn parse_sequence(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidArgument(format!("bad sequence entry `{x}`")))
        })
        .collect()
}

#[derive(Clone, Debug)]
enum Kind {
    Members(Vec<Matcher>),
    AllCycles,
    EvenCycles,
    OddCycles,
    Clique(usize),
    Dumbbell(usize),
    OneUniform(Vec<u32>),
}

/// A family prepared for repeated queries against working subgraphs.
#[derive(Clone, Debug)]
pub struct Tester {
    kind: Kind,
}

impl Tester {
    pub fn contains(&self, g: &IndexedGraph) -> bool {
        match &self.kind {
            Kind::Members(ms) => ms.iter().any(|m| m.is_contained(g)),
            Kind::AllCycles => has_cycle(g),
            Kind::EvenCycles => has_even_cycle(g),
            Kind::OddCycles => !is_bipartite(g),
            Kind::Clique(t) => has_clique(g, VertexSet::full(g.n()), *t),
            Kind::Dumbbell(r) => (0..g.n()).any(|v| has_dumbbell_at(g, *r, v)),
            Kind::OneUniform(d) => dominates(g.loop1_counts(), d),
        }
    }

    /// Whether `g` contains a member through a copy that uses the host key
    /// `key`. When `g` minus one copy of `key` is free this is equivalent
    /// to [`Tester::contains`].
    pub fn contains_at(&self, g: &IndexedGraph, key: &EdgeKey) -> bool {
        let pair = key.len() == 2 && !key.has_repeat();
        match &self.kind {
            Kind::Members(ms) => ms.iter().any(|m| m.is_contained_at(g, key)),
            Kind::AllCycles => {
                pair && g.pair_mult(key.vertex(0), key.vertex(1)) > 0
                    && connected_avoiding(g, key.vertex(0), key.vertex(1))
            }
            Kind::EvenCycles | Kind::OddCycles => pair && self.contains(g),
            Kind::Clique(t) => {
                if !pair {
                    return false;
                }
                let (u, v) = (key.vertex(0), key.vertex(1));
                g.pair_mult(u, v) > 0 && (*t == 2 || has_clique(g, g.nbrs(u).intersection(g.nbrs(v)), t - 2))
            }
            Kind::Dumbbell(r) => key.vertices().any(|v| has_dumbbell_at(g, *r, v)),
            Kind::OneUniform(d) => key.len() == 1 && dominates(g.loop1_counts(), d),
        }
    }
}

/// Whether `x`, sorted descending, dominates `d` entrywise.
pub fn dominates(x: &[u32], d: &[u32]) -> bool {
    if x.len() < d.len() {
        return false;
    }
    let mut s = x.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s.iter().zip(d).all(|(a, b)| a >= b)
}

fn has_clique(g: &IndexedGraph, cand: VertexSet, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    if cand.len() < t {
        return false;
    }
    let mut rest = cand;
    for v in cand {
        rest.remove(v);
        if has_clique(g, rest.intersection(g.nbrs(v)), t - 1) {
            return true;
        }
        if rest.len() < t {
            break;
        }
    }
    false
}

fn has_dumbbell_at(g: &IndexedGraph, r: usize, v: usize) -> bool {
    let looped = g.looped();
    if !looped.contains(v) {
        return false;
    }
    if r == 2 {
        return !g.nbrs(v).intersection(looped).is_empty();
    }
    g.higher_edges()
        .any(|(k, _)| k.len() == r && !k.has_repeat() && k.contains_vertex(v) && k.vertex_set().is_subset(looped))
}

fn simple_edge_count(g: &IndexedGraph) -> usize {
    (0..g.n()).map(|v| g.nbrs(v).len()).sum::<usize>() / 2
}

fn component_count(g: &IndexedGraph) -> usize {
    let mut seen = VertexSet::EMPTY;
    let mut count = 0;
    for s in 0..g.n() {
        if seen.contains(s) {
            continue;
        }
        count += 1;
        let mut frontier = VertexSet::singleton(s);
        seen.insert(s);
        while let Some(u) = frontier.first() {
            frontier.remove(u);
            let new = g.nbrs(u).difference(seen);
            seen = seen.union(new);
            frontier = frontier.union(new);
        }
    }
    count
}

fn has_cycle(g: &IndexedGraph) -> bool {
    simple_edge_count(g) + component_count(g) > g.n()
}

fn connected_avoiding(g: &IndexedGraph, u: usize, v: usize) -> bool {
    let mut seen = VertexSet::singleton(u);
    let mut frontier = g.nbrs(u).without(v);
    seen = seen.union(frontier);
    while let Some(w) = frontier.first() {
        frontier.remove(w);
        let nb = g.nbrs(w);
        if nb.contains(v) {
            return true;
        }
        let new = nb.difference(seen);
        seen = seen.union(new);
        frontier = frontier.union(new);
    }
    false
}

fn is_bipartite(g: &IndexedGraph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.nbrs(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// A block of the underlying simple graph contains an even cycle unless it
/// is a bridge or an odd cycle.
fn has_even_cycle(g: &IndexedGraph) -> bool {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    fn dfs(
        g: &IndexedGraph,
        u: usize,
        parent: usize,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<(usize, usize)>,
    ) -> bool {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        for w in g.nbrs(u) {
            if disc[w] == usize::MAX {
                stack.push((u, w));
                if dfs(g, w, u, disc, low, time, stack) {
                    return true;
                }
                low[u] = low[u].min(low[w]);
                if low[w] >= disc[u] {
                    let mut verts = VertexSet::EMPTY;
                    let mut edges = 0usize;
                    while let Some((a, b)) = stack.pop() {
                        verts.insert(a);
                        verts.insert(b);
                        edges += 1;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    let nv = verts.len();
                    if edges > nv || (edges == nv && nv % 2 == 0) {
                        return true;
                    }
                }
            } else if w != parent && disc[w] < disc[u] {
                stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        }
        false
    }

    for s in 0..n {
        if disc[s] == usize::MAX && dfs(g, s, usize::MAX, &mut disc, &mut low, &mut time, &mut edge_stack) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::contains;

    fn ig(g: &MultiHypergraph) -> IndexedGraph {
        IndexedGraph::from_graph(g)
    }

    #[test]
    fn documented_cases() {
        assert!(Pattern::EvenCycles.family_contains(&cons::clique(4)));
        assert!(!Pattern::EvenCycles.family_contains(&cons::clique(3)));
        let mut d = MultiHypergraph::from_pairs(2, &[(0, 1)]);
        d.add_edge(&[0], 1).unwrap();
        assert!(!Pattern::Dumbbell(2).family_contains(&d));
        d.add_edge(&[1], 1).unwrap();
        assert!(Pattern::Dumbbell(2).family_contains(&d));
        assert_eq!(
            Pattern::StarUnionEdge.free_characterization(),
            Some(FreeCharacterization::MatchingStarOrK4)
        );
        assert_eq!(
            Pattern::Path(3).free_characterization(),
            Some(FreeCharacterization::TrianglesAndStars)
        );
        assert_eq!(Pattern::Clique(4).free_characterization(), None);
    }

    #[test]
    fn parallel_edges_are_not_cycles() {
        let mut g = MultiHypergraph::new(3).unwrap();
        g.add_edge(&[0, 1], 2).unwrap();
        g.add_edge(&[1, 2], 3).unwrap();
        g.add_edge(&[2, 2], 1).unwrap();
        for p in [Pattern::AllCycles, Pattern::EvenCycles, Pattern::OddCycles] {
            assert!(!p.family_contains(&g), "{p}");
        }
    }

    #[test]
    fn literals_round_trip() {
        for s in [
            "cycles",
            "even-cycles",
            "odd-cycles",
            "K4",
            "P3",
            "P1uP2",
            "P3K3",
            "dumbbell2",
            "oneuniform:3,2,1",
        ] {
            let p: Pattern = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("K1".parse::<Pattern>().is_err());
        assert!("dumbbell1".parse::<Pattern>().is_err());
        assert!("Q7".parse::<Pattern>().is_err());
        assert_eq!(
            "oneuniform:1,3".parse::<Pattern>().unwrap(),
            Pattern::OneUniform(vec![3, 1])
        );
    }

    /// Lengths of all simple cycles, by explicit enumeration.
    fn cycle_lengths(g: &MultiHypergraph) -> Vec<usize> {
        let adj = g.adjacency();
        let n = g.n();
        let mut out = Vec::new();
        fn walk(adj: &[VertexSet], start: usize, u: usize, seen: VertexSet, len: usize, out: &mut Vec<usize>) {
            for w in adj[u] {
                if w == start && len >= 3 {
                    out.push(len);
                } else if w > start && !seen.contains(w) {
                    walk(adj, start, w, seen.with(w), len + 1, out);
                }
            }
        }
        for s in 0..n {
            walk(&adj, s, s, VertexSet::singleton(s), 1, &mut out);
        }
        out
    }

    #[test]
    fn infinite_families_match_cycle_enumeration() {
        for n in 1..=6 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let sel: Vec<_> = (0..pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect();
                let g = MultiHypergraph::from_pairs(n, &sel);
                let lens = cycle_lengths(&g);
                let h = ig(&g);
                assert_eq!(Pattern::AllCycles.tester().contains(&h), !lens.is_empty());
                assert_eq!(
                    Pattern::EvenCycles.tester().contains(&h),
                    lens.iter().any(|l| l % 2 == 0)
                );
                assert_eq!(
                    Pattern::OddCycles.tester().contains(&h),
                    lens.iter().any(|l| l % 2 == 1)
                );
            }
        }
    }

    #[test]
    fn named_finite_families_match_members() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let pats = [
            Pattern::Clique(3),
            Pattern::Clique(4),
            Pattern::Dumbbell(2),
            Pattern::OneUniform(vec![2, 1]),
        ];
        for _ in 0..300 {
            let n = rng.gen_range(2..=7);
            let mut g = MultiHypergraph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.55) {
                        g.add_edge(&[u, v], rng.gen_range(1..=2)).unwrap();
                    }
                }
                if rng.gen_bool(0.3) {
                    g.add_edge(&[u], rng.gen_range(1..=2)).unwrap();
                }
            }
            let h = ig(&g);
            for p in &pats {
                let expect = p.members().unwrap().iter().any(|m| contains(&g, m));
                let t = p.tester();
                assert_eq!(t.contains(&h), expect, "{p} in {g:?}");
                let at = g.edges().any(|(k, _)| t.contains_at(&h, k));
                assert_eq!(at, expect, "{p} anchored in {g:?}");
            }
        }
    }

    #[test]
    fn cycles_anchored_at_new_edge() {
        let t = Pattern::AllCycles.tester();
        let mut h = ig(&cons::path(3));
        let k = EdgeKey::pair(0, 3);
        assert!(!t.contains_at(&h, &k));
        h.add(&k, 1);
        assert!(t.contains_at(&h, &k));
    }
}
