//! The plane graph of a tree pair.
//!
//! The plus-tree is drawn above a horizontal line of leaves and the
//! minus-tree below it, upside down. The bounded face between leaves `k`
//! and `k + 1` is bounded by exactly one caret of each tree, the lowest
//! common ancestors of those leaves, and a gap edge joins them through
//! the face. The unbounded face joins the two roots by the outer edge.
//! Internal vertices are numbered in order, so internal vertex `k` of
//! either tree is the split between leaves `k` and `k + 1`.

use crate::trees::{BinaryTree, TreePair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Child {
    Internal(usize),
    Leaf(usize),
}

/// Internal-vertex structure of one tree, in-order numbered.
#[derive(Clone, Debug)]
pub struct TreeShape {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<[Child; 2]>,
    pub root: Option<usize>,
    /// For each leaf, the internal vertex it hangs from.
    pub leaf_parent: Vec<Option<usize>>,
    /// Height above the leaves (a caret has height 1).
    pub height: Vec<usize>,
}

impl TreeShape {
    pub fn new(tree: &BinaryTree) -> Self {
        let n = tree.leaf_count();
        let mut shape = TreeShape {
            parent: vec![None; n - 1],
            children: vec![[Child::Leaf(0); 2]; n - 1],
            root: None,
            leaf_parent: vec![None; n],
            height: vec![0; n - 1],
        };
        let mut leaves = 0;
        let mut internals = 0;
        shape.root = match shape.walk(tree, &mut leaves, &mut internals) {
            (Child::Internal(k), _) => Some(k),
            (Child::Leaf(_), _) => None,
        };
        shape
    }

    fn walk(&mut self, t: &BinaryTree, leaves: &mut usize, internals: &mut usize) -> (Child, usize) {
        match t {
            BinaryTree::Leaf => {
                *leaves += 1;
                (Child::Leaf(*leaves - 1), 0)
            }
            BinaryTree::Node(l, r) => {
                let (left, hl) = self.walk(l, leaves, internals);
                let me = *internals;
                *internals += 1;
                let (right, hr) = self.walk(r, leaves, internals);
                for c in [left, right] {
                    match c {
                        Child::Internal(k) => self.parent[k] = Some(me),
                        Child::Leaf(j) => self.leaf_parent[j] = Some(me),
                    }
                }
                self.children[me] = [left, right];
                self.height[me] = 1 + hl.max(hr);
                (Child::Internal(me), self.height[me])
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    /// Internal vertex `k` of one tree: the split between leaves `k`, `k + 1`.
    Split { side: Side, index: usize },
    Leaf(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Tree(Side),
    Gap(usize),
    Outer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub ends: [Vertex; 2],
    pub kind: EdgeKind,
}

/// The plane graph: tree edges of both trees meeting at shared leaves,
/// one gap edge per bounded face and the outer edge.
#[derive(Clone, Debug)]
pub struct DiagramGraph {
    pub leaves: usize,
    pub edges: Vec<GraphEdge>,
}

impl DiagramGraph {
    pub fn build(pair: &TreePair) -> Self {
        let n = pair.leaf_count();
        let mut edges = Vec::with_capacity(5 * n);
        let root_vertex = |side: Side, shape: &TreeShape| match shape.root {
            Some(k) => Vertex::Split { side, index: k },
            None => Vertex::Leaf(0),
        };
        let plus = TreeShape::new(pair.plus());
        let minus = TreeShape::new(pair.minus());
        for (side, shape) in [(Side::Plus, &plus), (Side::Minus, &minus)] {
            for (k, children) in shape.children.iter().enumerate() {
                for c in children {
                    let child = match *c {
                        Child::Internal(j) => Vertex::Split { side, index: j },
                        Child::Leaf(j) => Vertex::Leaf(j),
                    };
                    edges.push(GraphEdge { ends: [Vertex::Split { side, index: k }, child], kind: EdgeKind::Tree(side) });
                }
            }
        }
        for k in 0..n - 1 {
            edges.push(GraphEdge {
                ends: [Vertex::Split { side: Side::Plus, index: k }, Vertex::Split { side: Side::Minus, index: k }],
                kind: EdgeKind::Gap(k),
            });
        }
        edges.push(GraphEdge { ends: [root_vertex(Side::Plus, &plus), root_vertex(Side::Minus, &minus)], kind: EdgeKind::Outer });
        DiagramGraph { leaves: n, edges }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let splits = self.leaves.saturating_sub(1);
        let mut v: Vec<Vertex> = (0..splits).map(|index| Vertex::Split { side: Side::Plus, index }).collect();
        v.extend((0..splits).map(|index| Vertex::Split { side: Side::Minus, index }));
        v.extend((0..self.leaves).map(Vertex::Leaf));
        v
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().flat_map(|e| e.ends).filter(|&u| u == v).count()
    }
}
