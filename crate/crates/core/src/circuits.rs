//! Sets of sliding circuits as graphs, their orbits, and the orbit quotient.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::braid::GarsideBraid;
use crate::error::BraidError;
use crate::simple::DualSimple::{self, One};
use crate::simple::ALL;
use crate::sliding::{
    cycling, decycling, final_factor, initial_factor, is_in_sliding_circuit, is_rigid,
    slide_to_circuit,
};

/// Vertex cap used when callers have no opinion.
pub const DEFAULT_SC_CAP: usize = 1_000_000;

/// A minimal arrow `to = from^arrow` between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub arrow: DualSimple,
    pub to: usize,
}

/// The set of sliding circuits of a braid, with minimal-arrow edges.
///
/// Vertices are numbered in discovery order of a breadth-first search from
/// `base`; that order is deterministic.
#[derive(Clone, Debug)]
pub struct SCGraph {
    base: GarsideBraid,
    entry_conjugator: GarsideBraid,
    vertices: Vec<GarsideBraid>,
    index: BTreeMap<GarsideBraid, usize>,
    edges: Vec<Edge>,
    conjugators: Vec<GarsideBraid>,
}

impl SCGraph {
    /// The element the search started from; vertex 0.
    pub fn base(&self) -> &GarsideBraid {
        &self.base
    }

    /// `z` with `input^z = base`, for the braid `compute_sc` was called on.
    pub fn entry_conjugator(&self) -> &GarsideBraid {
        &self.entry_conjugator
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[GarsideBraid] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &GarsideBraid {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, y: &GarsideBraid) -> Option<usize> {
        self.index.get(y).copied()
    }

    pub fn contains(&self, y: &GarsideBraid) -> bool {
        self.index.contains_key(y)
    }

    /// `z` with `base^z = vertex(i)`.
    pub fn conjugator(&self, i: usize) -> &GarsideBraid {
        &self.conjugators[i]
    }

    pub fn conjugator_to(&self, y: &GarsideBraid) -> Option<&GarsideBraid> {
        self.index_of(y).map(|i| &self.conjugators[i])
    }
}

/// Closure of a sliding-circuit element under τ and cycling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted in canonical order.
    pub members: Vec<GarsideBraid>,
    /// Vertex ids in the graph the orbit was computed from, sorted.
    pub vertex_ids: Vec<usize>,
}

impl Orbit {
    /// The least member in canonical order.
    pub fn representative(&self) -> &GarsideBraid {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// One vertex per orbit; edges come from minimal useful arrows at each
/// orbit's representative.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    /// Sorted by representative.
    pub orbits: Vec<Orbit>,
    /// Orbit of each vertex of the underlying graph.
    pub orbit_of: Vec<usize>,
    /// Directed: `(a, b)` when the representative of `a` has a minimal arrow
    /// into orbit `b ≠ a`.
    pub arcs: BTreeSet<(usize, usize)>,
    /// Undirected version of `arcs`, stored as `(min, max)`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl QuotientGraph {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn degree(&self, orbit: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == orbit || *b == orbit)
            .count()
    }

    /// Every arc is matched by an arc in the opposite direction.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(a, b)| self.arcs.contains(&(b, a)))
    }

    pub fn is_connected(&self) -> bool {
        if self.orbits.is_empty() {
            return true;
        }
        let mut seen = alloc::vec![false; self.orbits.len()];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for &(u, v) in &self.edges {
                let next = if u == a { v } else if v == a { u } else { continue };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A simple path: connected, `n - 1` edges, no vertex of degree above 2.
    pub fn is_path(&self) -> bool {
        let n = self.orbits.len();
        n > 0
            && self.edges.len() == n - 1
            && self.is_connected()
            && (0..n).all(|o| self.degree(o) <= 2)
    }
}

/// Candidate arrows at `y`: the nontrivial divisors of ι(y) and ∂(φ(y)).
fn arrow_candidates(y: &GarsideBraid) -> u16 {
    match (initial_factor(y), final_factor(y)) {
        (Ok(first), Ok(last)) => {
            (first.divisor_mask() | last.complement().divisor_mask()) & !(1 << One.index())
        }
        _ => 0,
    }
}

/// Minimal arrows at a vertex already known to be in its sliding circuits.
fn minimal_arrows_unchecked(y: &GarsideBraid) -> Vec<DualSimple> {
    let candidates = arrow_candidates(y);
    if candidates == 0 {
        return Vec::new();
    }
    let mut lands = 0u16;
    for s in ALL {
        if candidates & (1 << s.index()) == 0 {
            continue;
        }
        let z = y.conjugate_by_simple(s);
        // outside the super summit set cannot be a circuit element
        if (z.inf(), z.sup()) == (y.inf(), y.sup()) && is_in_sliding_circuit(&z) {
            lands |= 1 << s.index();
        }
    }
    let mut arrows: Vec<DualSimple> = ALL
        .into_iter()
        .filter(|s| lands & (1 << s.index()) != 0)
        .filter(|s| {
            // no proper nontrivial prefix also lands in the circuits
            let proper = s.divisor_mask() & !(1 << s.index()) & !(1 << One.index());
            proper & lands == 0
        })
        .collect();
    arrows.sort_by_key(|s| (s.weight(), s.index()));
    arrows
}

/// Minimal arrows for `y`, ordered by weight and then canonical order.
pub fn minimal_arrows(y: &GarsideBraid) -> Result<Vec<DualSimple>, BraidError> {
    if !is_in_sliding_circuit(y) {
        return Err(BraidError::NotInSlidingCircuits);
    }
    Ok(minimal_arrows_unchecked(y))
}

/// Breadth-first computation of the set of sliding circuits of `x`.
///
/// The search starts from the first circuit element reached by sliding `x`
/// and is closed under minimal arrows, τ, cycling and decycling. It stops
/// with [`BraidError::CapExceeded`] once more than `cap` vertices are found.
pub fn compute_sc(x: &GarsideBraid, cap: usize) -> Result<SCGraph, BraidError> {
    let trajectory = slide_to_circuit(x);
    let base = trajectory.circuit_entry().clone();
    let mut g = SCGraph {
        base: base.clone(),
        entry_conjugator: trajectory.accumulated_conjugator,
        vertices: Vec::new(),
        index: BTreeMap::new(),
        edges: Vec::new(),
        conjugators: Vec::new(),
    };
    let mut queue = VecDeque::new();

    let add = |g: &mut SCGraph,
                   queue: &mut VecDeque<usize>,
                   y: GarsideBraid,
                   conj: GarsideBraid|
     -> Result<usize, BraidError> {
        if let Some(&i) = g.index.get(&y) {
            return Ok(i);
        }
        if g.vertices.len() >= cap {
            return Err(BraidError::CapExceeded { cap });
        }
        debug_assert_eq!(g.base.conjugate(&conj), y);
        let i = g.vertices.len();
        g.index.insert(y.clone(), i);
        g.vertices.push(y);
        g.conjugators.push(conj);
        queue.push_back(i);
        Ok(i)
    };

    add(&mut g, &mut queue, base, GarsideBraid::identity())?;
    while let Some(u) = queue.pop_front() {
        let y = g.vertices[u].clone();
        if y.is_delta_power() {
            continue;
        }
        let conj = g.conjugators[u].clone();
        for s in minimal_arrows_unchecked(&y) {
            let v = add(
                &mut g,
                &mut queue,
                y.conjugate_by_simple(s),
                conj.multiply_simple(s),
            )?;
            g.edges.push(Edge {
                from: u,
                arrow: s,
                to: v,
            });
        }
        let first = initial_factor(&y)?;
        let last = final_factor(&y)?;
        add(
            &mut g,
            &mut queue,
            y.tau_braid(),
            conj.multiply(&GarsideBraid::delta_power(1)),
        )?;
        add(&mut g, &mut queue, cycling(&y), conj.multiply_simple(first))?;
        add(
            &mut g,
            &mut queue,
            decycling(&y),
            conj.multiply(&GarsideBraid::from_simple(last).invert()),
        )?;
    }
    Ok(g)
}

/// Partition of the vertices into orbits under τ and cycling.
pub fn orbit_partition(g: &SCGraph) -> Vec<Orbit> {
    let n = g.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        let y = g.vertex(i);
        for image in [y.tau_braid(), cycling(y)] {
            let j = g
                .index_of(&image)
                .expect("sliding circuits are closed under τ and cycling");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut orbits: Vec<Orbit> = groups
        .into_values()
        .map(|vertex_ids| {
            let mut members: Vec<GarsideBraid> =
                vertex_ids.iter().map(|&i| g.vertex(i).clone()).collect();
            members.sort();
            Orbit {
                members,
                vertex_ids,
            }
        })
        .collect();
    orbits.sort_by(|a, b| a.representative().cmp(b.representative()));
    orbits
}

pub fn quotient_graph(g: &SCGraph) -> QuotientGraph {
    let orbits = orbit_partition(g);
    let mut orbit_of = alloc::vec![0; g.len()];
    for (o, orbit) in orbits.iter().enumerate() {
        for &v in &orbit.vertex_ids {
            orbit_of[v] = o;
        }
    }
    let mut out_edges: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in g.edges() {
        out_edges.entry(e.from).or_default().push(e.to);
    }
    let mut arcs = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for (o, orbit) in orbits.iter().enumerate() {
        let rep = g
            .index_of(orbit.representative())
            .expect("representative is a vertex");
        for &to in out_edges.get(&rep).map(Vec::as_slice).unwrap_or(&[]) {
            let target = orbit_of[to];
            if target != o {
                arcs.insert((o, target));
                edges.insert((o.min(target), o.max(target)));
            }
        }
    }
    QuotientGraph {
        orbits,
        orbit_of,
        arcs,
        edges,
    }
}

/// Whether every vertex of `g` is rigid.
pub fn all_rigid(g: &SCGraph) -> bool {
    g.vertices().iter().all(is_rigid)
}
