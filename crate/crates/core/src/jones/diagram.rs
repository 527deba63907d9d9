//! Link diagrams: 4-valent crossings with a planar rotation system.
//!
//! Each crossing lists the edges at its four slots counterclockwise.
//! Slots `0, 2` form one strand and slots `1, 3` the other. For a tree pair,
//! a plus vertex has slots `[parent, left, gap, right]` and a minus vertex
//! `[gap, left, parent, right]` (the outer edge stands in for the missing
//! parent at a root), so in both cases the even strand is vertical and the
//! odd strand horizontal. The vertical strand passes over at every vertex;
//! the mirror convention puts it under everywhere. A caret inserted in both
//! trees then adds a loop lying entirely under one strand, i.e. a split
//! unknot, while plus and minus vertices get opposite checkerboard signs.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::jones::graph::{Child, Side, TreeShape};
use crate::trees::TreePair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strand {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl Strand {
    pub fn other(self) -> Strand {
        match self {
            Strand::Even => Strand::Odd,
            Strand::Odd => Strand::Even,
        }
    }

    pub fn slots(self) -> [usize; 2] {
        match self {
            Strand::Even => [0, 2],
            Strand::Odd => [1, 3],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// The graph vertex this crossing came from, if built from a tree pair.
    pub vertex: Option<(Side, usize)>,
    /// Edge ids counterclockwise.
    pub slots: [usize; 4],
    pub over: Strand,
}

/// Orientation data from tracing every strand once.
#[derive(Clone, Debug)]
pub struct Traversal {
    /// Component index of each edge.
    pub component: Vec<usize>,
    /// Whether each edge is traversed from `ends[0]` to `ends[1]`.
    pub forward: Vec<bool>,
    /// Edges of each component in traversal order.
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<[SlotRef; 2]>,
    free_loops: usize,
    traversal: Traversal,
}

impl LinkDiagram {
    /// Builds a diagram from crossings given by edge ids. Every edge id in
    /// `0..edges` must occur in exactly two slots.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let edge_count = crossings.len() * 2;
        let mut ends: Vec<Vec<SlotRef>> = vec![Vec::new(); edge_count];
        for (c, x) in crossings.iter().enumerate() {
            for (slot, &e) in x.slots.iter().enumerate() {
                let Some(v) = ends.get_mut(e) else {
                    return Err(Error::Internal(format!("edge id {e} out of range (expected < {edge_count})")));
                };
                v.push(SlotRef { crossing: c, slot });
            }
        }
        let edges = ends
            .into_iter()
            .enumerate()
            .map(|(e, v)| {
                <[SlotRef; 2]>::try_from(v)
                    .map_err(|v| Error::Internal(format!("edge {e} occurs in {} slots, expected 2", v.len())))
            })
            .collect::<Result<Vec<_>>>()?;
        let traversal = trace(&crossings, &edges);
        Ok(LinkDiagram { crossings, edges, free_loops, traversal })
    }

    /// The diagram of a tree pair (not reduced first). `mirror` selects the
    /// opposite crossing convention.
    pub fn from_pair(pair: &TreePair, mirror: bool) -> Self {
        let n = pair.leaf_count();
        if n == 1 {
            return LinkDiagram::from_crossings(Vec::new(), 1).expect("empty diagram");
        }
        let plus = TreeShape::new(pair.plus());
        let minus = TreeShape::new(pair.minus());
        let over = if mirror { Strand::Odd } else { Strand::Even };
        let mut crossings: Vec<Crossing> = (0..2 * (n - 1))
            .map(|c| {
                let side = if c % 2 == 0 { Side::Plus } else { Side::Minus };
                Crossing { vertex: Some((side, c / 2)), slots: [usize::MAX; 4], over }
            })
            .collect();
        let plus_id = |k: usize| 2 * k;
        let minus_id = |k: usize| 2 * k + 1;
        let mut next = 0;
        let mut join = |crossings: &mut Vec<Crossing>, a: SlotRef, b: SlotRef| {
            crossings[a.crossing].slots[a.slot] = next;
            crossings[b.crossing].slots[b.slot] = next;
            next += 1;
        };
        let at = |crossing, slot| SlotRef { crossing, slot };
        // child slots: left = 1, right = 3 on both sides
        for (k, children) in plus.children.iter().enumerate() {
            for (i, c) in children.iter().enumerate() {
                let from = at(plus_id(k), 1 + 2 * i);
                match *c {
                    Child::Internal(j) => join(&mut crossings, from, at(plus_id(j), 0)),
                    Child::Leaf(j) => {
                        let m = minus.leaf_parent[j].expect("n >= 2");
                        let side = if minus.children[m][0] == Child::Leaf(j) { 1 } else { 3 };
                        join(&mut crossings, from, at(minus_id(m), side));
                    }
                }
            }
        }
        for (k, children) in minus.children.iter().enumerate() {
            for (i, c) in children.iter().enumerate() {
                if let Child::Internal(j) = *c {
                    join(&mut crossings, at(minus_id(k), 1 + 2 * i), at(minus_id(j), 2));
                }
            }
        }
        for k in 0..n - 1 {
            join(&mut crossings, at(plus_id(k), 2), at(minus_id(k), 0));
        }
        let (pr, mr) = (plus.root.expect("n >= 2"), minus.root.expect("n >= 2"));
        join(&mut crossings, at(plus_id(pr), 0), at(minus_id(mr), 2));
        LinkDiagram::from_crossings(crossings, 0).expect("tree pair diagrams are well formed")
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ends(&self, e: usize) -> [SlotRef; 2] {
        self.edges[e]
    }

    /// Closed curves without crossings.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn traversal(&self) -> &Traversal {
        &self.traversal
    }

    /// Number of closed strands.
    pub fn components(&self) -> usize {
        self.traversal.cycles.len() + self.free_loops
    }

    /// The same diagram with every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.over = c.over.other();
        }
        d
    }

    /// Whether the edge at `(crossing, slot)` points into the crossing.
    fn is_incoming(&self, s: SlotRef) -> bool {
        let e = self.crossings[s.crossing].slots[s.slot];
        let head = if self.traversal.forward[e] { self.edges[e][1] } else { self.edges[e][0] };
        head == s
    }

    /// The slot where the under strand enters crossing `c`.
    pub fn incoming_under_slot(&self, c: usize) -> usize {
        let [a, b] = self.crossings[c].over.other().slots();
        if self.is_incoming(SlotRef { crossing: c, slot: a }) {
            a
        } else {
            b
        }
    }

    /// Sign of crossing `c` under the traced orientation.
    pub fn sign(&self, c: usize) -> i32 {
        let under_in = self.incoming_under_slot(c);
        let [a, b] = self.crossings[c].over.slots();
        let over_in = if self.is_incoming(SlotRef { crossing: c, slot: a }) { a } else { b };
        if over_in == (under_in + 3) % 4 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.crossings.len()).map(|c| self.sign(c)).sum()
    }

    /// Whether both strands of crossing `c` belong to the same component.
    pub fn is_self_crossing(&self, c: usize) -> bool {
        let s = &self.crossings[c].slots;
        self.traversal.component[s[0]] == self.traversal.component[s[1]]
    }

    /// Writhe summed over self-crossings only. Reversing a component leaves
    /// every self-crossing sign unchanged, so this does not depend on the
    /// traced orientation.
    pub fn self_writhe(&self) -> i32 {
        (0..self.crossings.len()).filter(|&c| self.is_self_crossing(c)).map(|c| self.sign(c)).sum()
    }

    /// Planar diagram code: one `X(a,b,c,d)` line per crossing, edges
    /// numbered from 1 consecutively along each traced component, slots
    /// listed counterclockwise from the incoming under strand. Each
    /// crossingless loop is written `O(k)` with its own label.
    pub fn pd_code(&self) -> String {
        let mut label = vec![0usize; self.edges.len()];
        let mut next = 1;
        for cycle in &self.traversal.cycles {
            for &e in cycle {
                label[e] = next;
                next += 1;
            }
        }
        let mut out = String::new();
        for (c, x) in self.crossings.iter().enumerate() {
            let start = self.incoming_under_slot(c);
            let l: Vec<usize> = (0..4).map(|i| label[x.slots[(start + i) % 4]]).collect();
            writeln!(out, "X({},{},{},{})", l[0], l[1], l[2], l[3]).unwrap();
        }
        for _ in 0..self.free_loops {
            writeln!(out, "O({next})").unwrap();
            next += 1;
        }
        out
    }
}

fn trace(crossings: &[Crossing], edges: &[[SlotRef; 2]]) -> Traversal {
    let mut component = vec![usize::MAX; edges.len()];
    let mut forward = vec![true; edges.len()];
    let mut cycles = Vec::new();
    for start in 0..edges.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cycle = Vec::new();
        let (mut e, mut fwd) = (start, true);
        loop {
            component[e] = id;
            forward[e] = fwd;
            cycle.push(e);
            let head = if fwd { edges[e][1] } else { edges[e][0] };
            let out = SlotRef { crossing: head.crossing, slot: (head.slot + 2) % 4 };
            let next = crossings[out.crossing].slots[out.slot];
            let next_fwd = edges[next][0] == out;
            if next == start && next_fwd {
                break;
            }
            e = next;
            fwd = next_fwd;
        }
        cycles.push(cycle);
    }
    Traversal { component, forward, cycles }
}
