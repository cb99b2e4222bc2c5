//! Exhaustive enumeration of the frameworks of a matroid.
//!
//! Candidates are multigraphs whose edge set is the ground set, built one
//! element at a time with vertices introduced in first-appearance order (a
//! new endpoint always takes the smallest unused id).  Soundness of the
//! search rests on three facts:
//!
//! * a framework with no isolated vertex has at most `2|E|` vertices, so
//!   scanning every vertex count up to that bound is exhaustive;
//! * cycles of a partial graph persist in every completion, and in a
//!   framework every cycle is a circuit or independent — an inconsistent
//!   cycle kills its whole subtree;
//! * a subgraph with more edges than vertices spans a dependent set, so a
//!   component that outgrows its vertices while staying independent can
//!   never extend to a framework.
//!
//! For 3-connected matroids with at least four elements the space collapses:
//! every framework is connected on `rank` vertices, balanced and connected
//! on `rank + 1` vertices (forcing the cycle matroid, so this case only
//! exists for graphic inputs), or is a lift representation consisting of a
//! connected part plus a single unbalanced loop on its own vertex.  The last
//! kind is equivalent to the connected graph obtained by reattaching the
//! loop, which the `rank`-vertex search finds.
//!
//! Two frameworks are equivalent when a label-respecting vertex bijection
//! maps one to the other, or when both are lift representations related by
//! moving unbalanced loops between vertices.  Classes are keyed by the
//! canonical form of the graph with every unbalanced loop of a lift
//! representation detached onto its own fresh vertex; the listed
//! representative is that detached canonical form, so results do not depend
//! on which member a particular search strategy encounters first.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{verify_framework, FrameworkError};
use crate::bias::{translate_mask, BiasedGraph};
use crate::graph::Multigraph;
use crate::matroid::Matroid;

/// Vertex ids are kept in `u32` masks throughout the crate.
const VERTEX_LIMIT: usize = 32;

/// Prefixes of this depth become independent work items for worker threads.
const SPLIT_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    /// Cap on candidate vertex counts; `None` means the exhaustive `2|E|`.
    pub max_vertices: Option<usize>,
    /// Restrict the search to connected candidates (classes are then plain
    /// label-respecting isomorphism classes; no loop relocation).
    pub connected_only: bool,
    /// Use the collapsed candidate space for 3-connected inputs.
    pub three_connected_shortcut: bool,
    /// Refuse ground sets larger than this (the search is exponential).
    pub max_elements: usize,
    /// Worker threads; results are identical for every value.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> EnumOptions {
        EnumOptions {
            max_vertices: None,
            connected_only: false,
            three_connected_shortcut: true,
            max_elements: 10,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Edge assignments attempted (after the reachable-leaf filter).
    pub nodes: u64,
    /// Subtrees cut because a fresh cycle was neither circuit nor independent.
    pub pruned_bias: u64,
    /// Subtrees cut because an independent component outgrew its vertices.
    pub pruned_density: u64,
    /// Subtrees cut because too few edges remained to connect the graph.
    pub pruned_connectivity: u64,
    /// Fully assigned candidates reaching verification.
    pub leaves: u64,
    /// Candidates passing the full axiom check (before deduplication).
    pub frameworks_found: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.pruned_bias += other.pruned_bias;
        self.pruned_density += other.pruned_density;
        self.pruned_connectivity += other.pruned_connectivity;
        self.leaves += other.leaves;
        self.frameworks_found += other.frameworks_found;
    }
}

/// Whether a biased graph's frame or lift matroid reproduces the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Representation {
    pub is_frame: bool,
    pub is_lift: bool,
}

/// One equivalence class of frameworks.
#[derive(Debug, Clone)]
pub struct FrameworkClass {
    /// Canonical representative (detached form for lift classes with loops).
    pub graph: Multigraph,
    /// The bias derived from the matroid on the representative.
    pub bias: BiasedGraph,
    pub is_frame: bool,
    pub is_lift: bool,
    /// True when the class was folded together by unbalanced-loop relocation.
    pub relocated: bool,
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    /// One entry per equivalence class, sorted by canonical code.
    pub classes: Vec<FrameworkClass>,
    /// True when a vertex bound truncated the space instead of exhausting it.
    pub bounded: bool,
    pub stats: SearchStats,
}

#[derive(Debug, Clone)]
pub enum QgVerdict {
    QuasiGraphic(Box<FrameworkClass>),
    NotQuasiGraphic,
    /// The truncated search found nothing; no conclusion.
    Unknown,
}

impl QgVerdict {
    pub fn decided(&self) -> Option<bool> {
        match self {
            QgVerdict::QuasiGraphic(_) => Some(true),
            QgVerdict::NotQuasiGraphic => Some(false),
            QgVerdict::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    Delete,
    Contract,
}

impl MinorOp {
    pub fn as_str(self) -> &'static str {
        match self {
            MinorOp::Delete => "delete",
            MinorOp::Contract => "contract",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MinorEvidence {
    pub op: MinorOp,
    pub element: String,
    pub verdict: QgVerdict,
}

/// Evidence that a matroid is (or is not) minor-minimally not quasi-graphic.
#[derive(Debug, Clone)]
pub struct ExclusionReport {
    pub base: QgVerdict,
    pub minors: Vec<MinorEvidence>,
    /// `None` when some bounded sub-decision stayed inconclusive.
    pub excluded: Option<bool>,
}

/// Compares a biased graph's frame and lift matroids against a target,
/// matching elements by name.
pub fn classify_representation(
    b: &BiasedGraph,
    n: &Matroid,
) -> Result<Representation, FrameworkError> {
    let frame = b.frame_matroid()?;
    let lift = b.lift_matroid()?;
    Ok(Representation {
        is_frame: matroid_matches(&frame, n),
        is_lift: matroid_matches(&lift, n),
    })
}

fn matroid_matches(candidate: &Matroid, n: &Matroid) -> bool {
    if candidate.ground_size() != n.ground_size() {
        return false;
    }
    let mut perm = Vec::with_capacity(candidate.ground_size());
    for name in candidate.element_names() {
        match n.element_index(name) {
            Some(i) => perm.push(i),
            None => return false,
        }
    }
    let mut translated: Vec<u32> =
        candidate.circuits().iter().map(|&c| translate_mask(c, &perm)).collect();
    translated.sort_unstable_by_key(|&m| (m.count_ones(), m));
    translated == n.circuits()
}

/// Enumerates every framework of `n` up to equivalence, with pruning.
pub fn enumerate_frameworks(
    n: &Matroid,
    opts: &EnumOptions,
) -> Result<EnumerationResult, FrameworkError> {
    run(n, opts, true)
}

/// The reference enumeration: the same candidate space and the same
/// verification, with every heuristic cut disabled.  Kept as an oracle for
/// the pruned search.
pub fn enumerate_frameworks_naive(
    n: &Matroid,
    opts: &EnumOptions,
) -> Result<EnumerationResult, FrameworkError> {
    run(n, opts, false)
}

/// Decides quasi-graphicness; the witness is the canonically least class.
pub fn decide_quasi_graphic(
    n: &Matroid,
    opts: &EnumOptions,
) -> Result<QgVerdict, FrameworkError> {
    let result = enumerate_frameworks(n, opts)?;
    Ok(match result.classes.into_iter().next() {
        Some(class) => QgVerdict::QuasiGraphic(Box::new(class)),
        None if result.bounded => QgVerdict::Unknown,
        None => QgVerdict::NotQuasiGraphic,
    })
}

/// A matroid is an excluded minor for quasi-graphicness when it is not
/// quasi-graphic but every single-element deletion and contraction is.
pub fn is_excluded_minor(
    n: &Matroid,
    opts: &EnumOptions,
) -> Result<ExclusionReport, FrameworkError> {
    let base = decide_quasi_graphic(n, opts)?;
    match base.decided() {
        Some(true) => {
            return Ok(ExclusionReport { base, minors: Vec::new(), excluded: Some(false) })
        }
        None => return Ok(ExclusionReport { base, minors: Vec::new(), excluded: None }),
        Some(false) => {}
    }
    let mut minors = Vec::new();
    let mut all_quasi_graphic = Some(true);
    for element in n.element_names().to_vec() {
        let mask = n.mask_of(&[element.as_str()])?;
        for op in [MinorOp::Delete, MinorOp::Contract] {
            let minor = match op {
                MinorOp::Delete => n.delete(mask),
                MinorOp::Contract => n.contract(mask),
            };
            let verdict = decide_quasi_graphic(&minor, opts)?;
            all_quasi_graphic = match (all_quasi_graphic, verdict.decided()) {
                (Some(false), _) => Some(false),
                (_, Some(false)) => Some(false),
                (None, _) | (_, None) => None,
                (Some(true), Some(true)) => Some(true),
            };
            minors.push(MinorEvidence { op, element: element.clone(), verdict });
        }
    }
    Ok(ExclusionReport { base, minors, excluded: all_quasi_graphic })
}

#[derive(Debug, Clone, Copy)]
struct SearchSpec {
    v: usize,
    connected: bool,
    balanced_only: bool,
}

fn run(n: &Matroid, opts: &EnumOptions, pruned: bool) -> Result<EnumerationResult, FrameworkError> {
    let m = n.ground_size();
    if m > opts.max_elements {
        return Err(FrameworkError::TooManyElements { size: m, limit: opts.max_elements });
    }
    let relocate = !opts.connected_only;

    if m == 0 {
        // the empty graph is the only candidate
        let empty = Multigraph::new(0);
        let mut classes = Vec::new();
        if verify_framework(&empty, n).valid {
            classes.push(class_from_code(n, &[0], relocate)?);
        }
        return Ok(EnumerationResult { classes, bounded: false, stats: SearchStats::default() });
    }

    let exhaustive_cap = (2 * m).min(VERTEX_LIMIT);
    let hard_cap = exhaustive_cap.min(opts.max_vertices.unwrap_or(usize::MAX));
    let mut bounded = hard_cap < 2 * m;

    let searches: Vec<SearchSpec> = if pruned
        && opts.three_connected_shortcut
        && m >= 4
        && n.rank() >= 1
        && n.is_k_connected(3)
    {
        bounded = false;
        let r = n.rank();
        let mut planned = vec![SearchSpec { v: r, connected: true, balanced_only: false }];
        // balanced connected frameworks force the cycle matroid on rank + 1
        // vertices, which only a graphic input admits
        let graphic = n.is_graphic().unwrap_or(true);
        if graphic {
            planned.push(SearchSpec { v: r + 1, connected: true, balanced_only: true });
        }
        let feasible: Vec<SearchSpec> =
            planned.into_iter().filter(|s| s.v <= hard_cap && s.v >= 1).collect();
        if feasible.len() < if graphic { 2 } else { 1 } {
            bounded = true;
        }
        feasible
    } else {
        (1..=hard_cap)
            .map(|v| SearchSpec { v, connected: opts.connected_only, balanced_only: false })
            .collect()
    };

    // walk each search to a fixed small depth sequentially, collecting
    // deeper subtrees as independent work items; totals are then identical
    // for every worker count
    let mut base_stats = SearchStats::default();
    let mut keys: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut items: Vec<(SearchSpec, Vec<(u8, u8)>, usize)> = Vec::new();
    for spec in &searches {
        let mut dfs = Dfs::new(n, *spec, pruned, relocate, SPLIT_DEPTH.min(m));
        dfs.descend(0);
        base_stats.absorb(&dfs.stats);
        keys.append(&mut dfs.keys);
        items.extend(dfs.prefixes.into_iter().map(|(ends, used)| (*spec, ends, used)));
    }

    let jobs = opts.jobs.max(1).min(items.len().max(1));
    let outcomes: Vec<(SearchStats, BTreeSet<Vec<usize>>)> = if jobs <= 1 {
        items.iter().map(|item| run_item(n, item, pruned, relocate, m)).collect()
    } else {
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<(SearchStats, BTreeSet<Vec<usize>>)>>> =
            (0..items.len()).map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= items.len() {
                        break;
                    }
                    let out = run_item(n, &items[i], pruned, relocate, m);
                    *slots[i].lock().unwrap() = Some(out);
                });
            }
        });
        slots.into_iter().map(|slot| slot.into_inner().unwrap().unwrap()).collect()
    };

    let mut stats = base_stats;
    for (item_stats, item_keys) in outcomes {
        stats.absorb(&item_stats);
        keys.extend(item_keys);
    }

    let mut classes = Vec::with_capacity(keys.len());
    for code in &keys {
        classes.push(class_from_code(n, code, relocate)?);
    }
    Ok(EnumerationResult { classes, bounded, stats })
}

fn run_item(
    n: &Matroid,
    item: &(SearchSpec, Vec<(u8, u8)>, usize),
    pruned: bool,
    relocate: bool,
    m: usize,
) -> (SearchStats, BTreeSet<Vec<usize>>) {
    let (spec, ends, used) = item;
    let mut dfs = Dfs::new(n, *spec, pruned, relocate, m);
    dfs.ends = ends.clone();
    dfs.used = *used;
    dfs.descend(ends.len());
    (dfs.stats, dfs.keys)
}

/// Rebuilds a class representative from its canonical code (normalized
/// endpoint pairs in element order, then the vertex count) and classifies it.
fn class_from_code(
    n: &Matroid,
    code: &[usize],
    relocate: bool,
) -> Result<FrameworkClass, FrameworkError> {
    let vertices = *code.last().expect("codes are never empty");
    let mut graph = Multigraph::new(vertices);
    for (i, name) in n.element_names().iter().enumerate() {
        graph
            .add_edge(name.as_str(), code[2 * i], code[2 * i + 1])
            .expect("canonical codes encode valid graphs");
    }
    let report = verify_framework(&graph, n);
    assert!(report.valid, "class representatives re-verify: {:?}", report.failure);
    let bias = report.derived.expect("valid reports carry the derived bias");
    let representation = classify_representation(&bias, n)?;
    let has_unbalanced_loop = (0..graph.edge_count())
        .any(|e| graph.is_loop(e) && bias.is_balanced_cycle(1 << e) == Some(false));
    let relocated = relocate && representation.is_lift && has_unbalanced_loop;
    Ok(FrameworkClass {
        graph,
        bias,
        is_frame: representation.is_frame,
        is_lift: representation.is_lift,
        relocated,
    })
}

struct Dfs<'a> {
    n: &'a Matroid,
    m: usize,
    v: usize,
    connected: bool,
    balanced_only: bool,
    pruned: bool,
    relocate: bool,
    /// Depth at which subtrees are handed out as work items (`m` disables).
    stop_depth: usize,
    ends: Vec<(u8, u8)>,
    used: usize,
    stats: SearchStats,
    keys: BTreeSet<Vec<usize>>,
    prefixes: Vec<(Vec<(u8, u8)>, usize)>,
}

impl<'a> Dfs<'a> {
    fn new(n: &'a Matroid, spec: SearchSpec, pruned: bool, relocate: bool, stop_depth: usize) -> Dfs<'a> {
        Dfs {
            n,
            m: n.ground_size(),
            v: spec.v,
            connected: spec.connected,
            balanced_only: spec.balanced_only,
            pruned,
            relocate,
            stop_depth,
            ends: Vec::new(),
            used: 0,
            stats: SearchStats::default(),
            keys: BTreeSet::new(),
            prefixes: Vec::new(),
        }
    }

    fn descend(&mut self, depth: usize) {
        if depth == self.m {
            self.leaf();
            return;
        }
        if depth == self.stop_depth {
            self.prefixes.push((self.ends.clone(), self.used));
            return;
        }
        let remaining_after = self.m - depth - 1;
        for (a, b) in self.candidates() {
            let new_used = self.used.max(b as usize + 1);
            // each later element covers at most two of the missing vertices
            if self.v - new_used > 2 * remaining_after {
                continue;
            }
            self.stats.nodes += 1;
            if self.pruned && !self.cycles_consistent(depth, a, b) {
                self.stats.pruned_bias += 1;
                continue;
            }
            let previous_used = self.used;
            self.ends.push((a, b));
            self.used = new_used;
            if !self.pruned || self.structure_feasible(remaining_after) {
                self.descend(depth + 1);
            }
            self.ends.pop();
            self.used = previous_used;
        }
    }

    /// Endpoint pairs in a fixed order: pairs of introduced vertices, then
    /// one-new-endpoint edges, a loop on a new vertex, and a fresh link.
    fn candidates(&self) -> Vec<(u8, u8)> {
        let u = self.used;
        let mut out = Vec::with_capacity(u * (u + 3) / 2 + 2);
        for a in 0..u {
            for b in a..u {
                out.push((a as u8, b as u8));
            }
        }
        if u < self.v {
            for a in 0..u {
                out.push((a as u8, u as u8));
            }
            out.push((u as u8, u as u8));
            if u + 1 < self.v {
                out.push((u as u8, u as u8 + 1));
            }
        }
        out
    }

    /// Every cycle first closed by this edge must be a circuit or
    /// independent (a circuit, when only balanced candidates survive).
    fn cycles_consistent(&self, depth: usize, a: u8, b: u8) -> bool {
        let new_bit = 1u32 << depth;
        if a == b {
            return self.cycle_ok(new_bit);
        }
        if b as usize >= self.used {
            // a link with a fresh endpoint cannot close a cycle
            return true;
        }
        // adjacency over the already-assigned elements, loops skipped
        let mut adj: Vec<Vec<(u8, usize)>> = vec![Vec::new(); self.used];
        for (e, &(x, y)) in self.ends.iter().enumerate().take(depth) {
            if x != y {
                adj[x as usize].push((y, e));
                adj[y as usize].push((x, e));
            }
        }
        let mut visited = 1u32 << a;
        self.paths_ok(&adj, a, b, &mut visited, 0, new_bit)
    }

    fn paths_ok(
        &self,
        adj: &[Vec<(u8, usize)>],
        at: u8,
        target: u8,
        visited: &mut u32,
        path_mask: u32,
        new_bit: u32,
    ) -> bool {
        for &(next, edge) in &adj[at as usize] {
            let cycle = path_mask | 1 << edge | new_bit;
            if next == target {
                if !self.cycle_ok(cycle) {
                    return false;
                }
                continue;
            }
            if *visited & (1 << next) != 0 {
                continue;
            }
            *visited |= 1 << next;
            let ok = self.paths_ok(adj, next, target, visited, path_mask | 1 << edge, new_bit);
            *visited &= !(1 << next);
            if !ok {
                return false;
            }
        }
        true
    }

    fn cycle_ok(&self, mask: u32) -> bool {
        if self.balanced_only {
            self.n.is_circuit(mask)
        } else {
            self.n.is_circuit(mask) || self.n.is_independent(mask)
        }
    }

    /// Density and connectivity cuts after the new edge is in place.
    fn structure_feasible(&mut self, remaining_after: usize) -> bool {
        let mut parent: Vec<u8> = (0..self.used as u8).collect();
        for &(a, b) in &self.ends {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
            }
        }
        let &(last_a, _) = self.ends.last().expect("called after a push");
        let target = find(&mut parent, last_a);
        let mut component_edges = 0usize;
        let mut component_mask = 0u32;
        for (e, &(a, _)) in self.ends.iter().enumerate() {
            if find(&mut parent, a) == target {
                component_edges += 1;
                component_mask |= 1 << e;
            }
        }
        let mut component_vertices = 0usize;
        let mut components = 0usize;
        for x in 0..self.used as u8 {
            let root = find(&mut parent, x);
            if root == target {
                component_vertices += 1;
            }
            if root == x {
                components += 1;
            }
        }
        if component_edges > component_vertices && self.n.is_independent(component_mask) {
            self.stats.pruned_density += 1;
            return false;
        }
        if self.connected {
            let uncovered = self.v - self.used;
            // every later edge joins at most two of the pieces that must
            // eventually merge into one
            if components + uncovered > remaining_after + 1 {
                self.stats.pruned_connectivity += 1;
                return false;
            }
        }
        true
    }

    fn leaf(&mut self) {
        debug_assert_eq!(self.used, self.v, "reachable-leaf filter guarantees full cover");
        self.stats.leaves += 1;
        if self.connected && !self.currently_connected() {
            return;
        }
        let mut graph = Multigraph::new(self.v);
        for (i, name) in self.n.element_names().iter().enumerate() {
            let (a, b) = self.ends[i];
            graph
                .add_edge(name.as_str(), a as usize, b as usize)
                .expect("endpoints stay below the vertex count");
        }
        let report = verify_framework(&graph, self.n);
        if !report.valid {
            return;
        }
        self.stats.frameworks_found += 1;
        let derived = report.derived.expect("valid reports carry the derived bias");
        let unbalanced_loops: Vec<usize> = (0..self.m)
            .filter(|&e| {
                graph.is_loop(e) && derived.is_balanced_cycle(1 << e) == Some(false)
            })
            .collect();
        let relocate = self.relocate
            && !unbalanced_loops.is_empty()
            && derived
                .lift_matroid()
                .map(|lift| matroid_matches(&lift, self.n))
                .unwrap_or(false);
        let keyed = if relocate { detached_form(&graph, &unbalanced_loops) } else { graph };
        let (code, _) = keyed.canonical_labeled_code();
        self.keys.insert(code);
    }

    fn currently_connected(&self) -> bool {
        let mut parent: Vec<u8> = (0..self.used as u8).collect();
        for &(a, b) in &self.ends {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
            }
        }
        (0..self.used as u8).filter(|&x| find(&mut parent, x) == x).count() <= 1
    }
}

fn find(parent: &mut [u8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let grand = parent[parent[x as usize] as usize];
        parent[x as usize] = grand;
        x = grand;
    }
    x
}

/// Moves each listed loop onto a fresh vertex of its own and drops any
/// vertex left isolated, compacting ids in first-use order.
fn detached_form(graph: &Multigraph, relocated: &[usize]) -> Multigraph {
    let mut kept: Vec<Option<usize>> = vec![None; graph.vertex_count()];
    let mut next = 0usize;
    for e in 0..graph.edge_count() {
        if relocated.contains(&e) {
            continue;
        }
        let (u, v) = graph.endpoints(e);
        for w in [u, v] {
            if kept[w].is_none() {
                kept[w] = Some(next);
                next += 1;
            }
        }
    }
    let mut out = Multigraph::new(next + relocated.len());
    let mut fresh = next;
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        if relocated.contains(&e) {
            out.add_edge(graph.label(e), fresh, fresh).expect("fresh vertex is in range");
            fresh += 1;
        } else {
            out.add_edge(
                graph.label(e),
                kept[u].expect("kept endpoints are mapped"),
                kept[v].expect("kept endpoints are mapped"),
            )
            .expect("compacted endpoints are in range");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doubled_triangle() -> Multigraph {
        Multigraph::complete(3).k_multiply(2).unwrap()
    }

    #[test]
    fn u36_frameworks_are_exactly_the_doubled_triangles() {
        let n = Matroid::uniform(3, 6);
        let result = enumerate_frameworks(&n, &EnumOptions::default()).unwrap();
        assert!(!result.bounded);
        // one class per way of pairing the six elements into three parallel
        // classes: 6!/(2!^3 3!) = 15
        assert_eq!(result.classes.len(), 15);
        let model = doubled_triangle();
        for class in &result.classes {
            assert!(class.graph.shape_isomorphic(&model));
            assert!(class.is_frame && class.is_lift);
            assert!(!class.relocated);
        }
    }

    #[test]
    fn pruned_and_naive_agree_on_u24() {
        let n = Matroid::uniform(2, 4);
        let opts = EnumOptions::default();
        let pruned = enumerate_frameworks(&n, &opts).unwrap();
        let naive = enumerate_frameworks_naive(&n, &opts).unwrap();
        assert_eq!(pruned.classes.len(), naive.classes.len());
        for (a, b) in pruned.classes.iter().zip(&naive.classes) {
            assert_eq!(a.graph.canonical_labeled_code(), b.graph.canonical_labeled_code());
            assert_eq!((a.is_frame, a.is_lift, a.relocated), (b.is_frame, b.is_lift, b.relocated));
        }
        assert!(!pruned.bounded && !naive.bounded);
    }

    #[test]
    fn single_element_matroid_has_the_loop_and_the_link() {
        let n = Matroid::uniform(1, 1);
        let result = enumerate_frameworks(&n, &EnumOptions::default()).unwrap();
        assert_eq!(result.classes.len(), 2);
        let loops: Vec<bool> =
            result.classes.iter().map(|c| c.graph.is_loop(0)).collect();
        assert_eq!(loops.iter().filter(|&&l| l).count(), 1);
        // the unbalanced loop is a lift representation living on its own
        // vertex, so it counts as relocated
        for class in &result.classes {
            if class.graph.is_loop(0) {
                assert!(class.is_lift && class.relocated);
            }
        }
    }

    #[test]
    fn u37_is_not_quasi_graphic() {
        let n = Matroid::uniform(3, 7);
        let verdict = decide_quasi_graphic(&n, &EnumOptions::default()).unwrap();
        assert!(matches!(verdict, QgVerdict::NotQuasiGraphic));
    }

    #[test]
    fn u37_is_an_excluded_minor() {
        let n = Matroid::uniform(3, 7);
        let report = is_excluded_minor(&n, &EnumOptions::default()).unwrap();
        assert_eq!(report.excluded, Some(true));
        assert_eq!(report.minors.len(), 14);
        assert!(report
            .minors
            .iter()
            .all(|ev| matches!(ev.verdict, QgVerdict::QuasiGraphic(_))));
    }

    #[test]
    fn vertex_bounds_flag_truncated_searches() {
        // squeeze U_{1,2} below its exhaustive bound of four vertices
        let n = Matroid::uniform(1, 2);
        let opts = EnumOptions { max_vertices: Some(2), ..EnumOptions::default() };
        let result = enumerate_frameworks(&n, &opts).unwrap();
        assert!(result.bounded);
        // the parallel pair is still found
        assert!(!result.classes.is_empty());
    }

    #[test]
    fn ground_set_limit_is_enforced() {
        let n = Matroid::uniform(2, 5);
        let opts = EnumOptions { max_elements: 4, ..EnumOptions::default() };
        match enumerate_frameworks(&n, &opts) {
            Err(FrameworkError::TooManyElements { size: 5, limit: 4 }) => {}
            other => panic!("expected the element limit to fire, got {other:?}"),
        }
    }

    #[test]
    fn empty_matroid_has_the_empty_framework() {
        let n = Matroid::from_circuits(Vec::<String>::new(), Vec::new()).unwrap();
        let result = enumerate_frameworks(&n, &EnumOptions::default()).unwrap();
        assert_eq!(result.classes.len(), 1);
        assert_eq!(result.classes[0].graph.vertex_count(), 0);
        let verdict = decide_quasi_graphic(&n, &EnumOptions::default()).unwrap();
        assert!(matches!(verdict, QgVerdict::QuasiGraphic(_)));
    }

    #[test]
    fn worker_counts_do_not_change_results() {
        let n = Matroid::uniform(2, 5);
        let sequential =
            enumerate_frameworks(&n, &EnumOptions { jobs: 1, ..EnumOptions::default() }).unwrap();
        let parallel =
            enumerate_frameworks(&n, &EnumOptions { jobs: 4, ..EnumOptions::default() }).unwrap();
        assert_eq!(sequential.stats, parallel.stats);
        assert_eq!(sequential.classes.len(), parallel.classes.len());
        for (a, b) in sequential.classes.iter().zip(&parallel.classes) {
            assert_eq!(a.graph.canonical_labeled_code(), b.graph.canonical_labeled_code());
        }
    }

    #[test]
    fn graphic_input_lists_its_own_graph_among_the_classes() {
        let k4 = Multigraph::complete(4);
        let n = Matroid::from_graph(&k4).unwrap();
        let result = enumerate_frameworks(&n, &EnumOptions::default()).unwrap();
        let found = result
            .classes
            .iter()
            .any(|c| c.graph.labeled_isomorphic(&k4).is_some() && c.bias.is_balanced());
        assert!(found, "the balanced K4 framework must appear");
    }

    #[test]
    fn detaching_moves_loops_to_fresh_vertices() {
        let mut g = Multigraph::new(2);
        g.add_edge("e1", 0, 1).unwrap();
        g.add_edge("e2", 0, 0).unwrap();
        g.add_edge("e3", 1, 1).unwrap();
        let detached = detached_form(&g, &[1, 2]);
        assert_eq!(detached.vertex_count(), 4);
        assert_eq!(detached.endpoints(0), (0, 1));
        assert_eq!(detached.endpoints(1), (2, 2));
        assert_eq!(detached.endpoints(2), (3, 3));
    }
}
