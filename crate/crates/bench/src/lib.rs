//! Inputs shared by the benchmarks.

use thompson_core::Element;

/// `x0 x1 ... x{n-1}` followed by its flip: a deep, lopsided element.
pub fn staircase(n: usize) -> Element {
    let g = (0..n).fold(Element::identity(), |acc, k| acc.multiply(&Element::generator(k)));
    g.multiply(&g.flip())
}

/// `k` trefoils glued along the last leaf.
pub fn trefoil_chain(k: usize) -> Element {
    let t = thompson_core::library::lookup("trefoil").expect("library trefoil");
    (1..k).fold(t.clone(), |acc, _| acc.attach(acc.leaf_count() - 1, &t).expect("reduced"))
}
