//! Link invariants of a diagram: Fox colorings, the determinant and the
//! Kauffman bracket.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::jones::diagram::LinkDiagram;
use crate::jones::poly::LaurentPoly;

/// Crossing cap for the bracket unless configured otherwise.
pub const DEFAULT_BRACKET_CAP: usize = 24;

/// Primes whose coloring counts go into a fingerprint.
pub const FINGERPRINT_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// Arcs: maximal paths of edges joined through over-strands.
#[derive(Clone, Debug)]
pub struct Arcs {
    /// Arc id of each edge.
    pub of_edge: Vec<usize>,
    /// Arc count, including one arc per crossingless loop.
    pub count: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn arcs(d: &LinkDiagram) -> Arcs {
    let mut parent: Vec<usize> = (0..d.edge_count()).collect();
    for x in d.crossings() {
        let [a, b] = x.over.slots();
        let (ra, rb) = (find(&mut parent, x.slots[a]), find(&mut parent, x.slots[b]));
        parent[ra] = rb;
    }
    let mut ids = HashMap::new();
    let mut of_edge = Vec::with_capacity(d.edge_count());
    for e in 0..d.edge_count() {
        let r = find(&mut parent, e);
        let next = ids.len();
        of_edge.push(*ids.entry(r).or_insert(next));
    }
    Arcs { count: ids.len() + d.free_loops(), of_edge }
}

/// Rows `2·over − under₁ − under₂`, one per crossing, over the arcs.
pub fn coloring_matrix(d: &LinkDiagram) -> (Vec<Vec<i64>>, usize) {
    let a = arcs(d);
    let rows = d
        .crossings()
        .iter()
        .map(|x| {
            let mut row = vec![0i64; a.count];
            let [o1, _] = x.over.slots();
            let [u1, u2] = x.over.other().slots();
            row[a.of_edge[x.slots[o1]]] += 2;
            row[a.of_edge[x.slots[u1]]] -= 1;
            row[a.of_edge[x.slots[u2]]] -= 1;
            row
        })
        .collect();
    (rows, a.count)
}

#[allow(clippy::needless_range_loop)]
fn rank_mod_p(mut m: Vec<Vec<i64>>, cols: usize, p: i64) -> usize {
    for row in &mut m {
        for v in row.iter_mut() {
            *v = v.rem_euclid(p);
        }
    }
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..cols {
                    m[r][c] = (m[r][c] - f * m[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let e = a.extended_gcd(&p);
    e.x.rem_euclid(p)
}

/// Number of Fox `p`-colorings: `p` to the nullity of the coloring system
/// over the field with `p` elements.
pub fn colorings(d: &LinkDiagram, p: u32) -> BigUint {
    let (m, cols) = coloring_matrix(d);
    let nullity = cols - rank_mod_p(m, cols, p as i64);
    BigUint::from(p).pow(nullity as u32)
}

/// The abelian group presented by the coloring matrix (generators arcs,
/// relations crossings) as `(free rank, torsion order)`. It is `Z` plus the
/// first homology of the double branched cover.
#[allow(clippy::needless_range_loop)]
fn coloring_group(rows: Vec<Vec<i64>>, cols: usize) -> (usize, BigUint) {
    let mut m: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let nrows = m.len();
    let mut order = BigUint::one();
    let mut t = 0;
    while t < nrows.min(cols) {
        let smallest = |m: &Vec<Vec<BigInt>>, cells: &mut dyn Iterator<Item = (usize, usize)>| {
            cells.filter(|&(i, j)| !m[i][j].is_zero()).min_by_key(|&(i, j)| m[i][j].abs())
        };
        let Some((pi, pj)) = smallest(&m, &mut (t..nrows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let pivot = m[t][t].clone();
            for i in t + 1..nrows {
                if !m[i][t].is_zero() {
                    let q = &m[i][t] / &pivot;
                    for j in t..cols {
                        let v = &q * &m[t][j];
                        m[i][j] -= v;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = &m[t][j] / &pivot;
                    for i in t..nrows {
                        let v = &q * &m[i][t];
                        m[i][j] -= v;
                    }
                }
            }
            let mut cells = (t + 1..nrows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
            match smallest(&m, &mut cells) {
                None => break,
                Some((i, j)) => {
                    if i != t {
                        m.swap(t, i);
                    } else {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
        }
        order *= m[t][t].magnitude();
        t += 1;
    }
    (cols - t, order)
}

/// `|H_1|` of the double branched cover, or 0 when it is infinite (e.g.
/// for split links).
pub fn determinant(d: &LinkDiagram) -> BigUint {
    let (m, cols) = coloring_matrix(d);
    let (free, order) = coloring_group(m, cols);
    if free == 1 {
        order
    } else {
        BigUint::zero()
    }
}

/// Processing order keeping the set of half-processed edges small: each
/// step takes the crossing sharing the most edges with those already taken.
fn sweep_order(d: &LinkDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut taken = vec![false; n];
    let mut touched = vec![0usize; d.edge_count()];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&c| !taken[c])
            .max_by_key(|&c| {
                let shared: usize = d.crossings()[c].slots.iter().map(|&e| touched[e]).sum();
                (shared, std::cmp::Reverse(c))
            })
            .expect("untaken crossing");
        taken[next] = true;
        for &e in &d.crossings()[next].slots {
            touched[e] += 1;
        }
        order.push(next);
    }
    order
}

/// Partial state of the state sum: for each half-processed edge, the edge
/// at the other end of its path through the processed crossings.
type Frontier = Vec<(u32, u32)>;

fn partner(f: &Frontier, e: u32) -> Option<u32> {
    f.binary_search_by_key(&e, |&(k, _)| k).ok().map(|i| f[i].1)
}

fn set(f: &mut Frontier, e: u32, p: u32) {
    match f.binary_search_by_key(&e, |&(k, _)| k) {
        Ok(i) => f[i].1 = p,
        Err(i) => f.insert(i, (e, p)),
    }
}

fn remove(f: &mut Frontier, e: u32) {
    if let Ok(i) = f.binary_search_by_key(&e, |&(k, _)| k) {
        f.remove(i);
    }
}

/// Joins the path ends at edges `a` and `b` through the current crossing.
/// Returns true when this closes a loop.
fn connect(f: &mut Frontier, a: u32, b: u32) -> bool {
    if a == b {
        return true;
    }
    let (pa, pb) = (partner(f, a), partner(f, b));
    if pa == Some(b) {
        remove(f, a);
        remove(f, b);
        return true;
    }
    let far_a = match pa {
        Some(p) => {
            remove(f, a);
            p
        }
        None => a,
    };
    let far_b = match pb {
        Some(p) => {
            remove(f, b);
            p
        }
        None => b,
    };
    set(f, far_a, far_b);
    set(f, far_b, far_a);
    false
}

/// Kauffman bracket with `<O> = 1`, `<D ⊔ O> = δ<D>`, `δ = −A² − A⁻²`, and
/// `<X> = A <smoothing joining slots 0-1, 2-3> + A⁻¹ <joining 0-3, 1-2>`
/// where slot 0 is an under-strand slot.
///
/// Computed as a state sum merged crossing by crossing: states that agree
/// on how the open edge ends are paired up and on the loop count so far
/// are summed, so the cost follows the width of the sweep rather than 2^c.
pub fn kauffman_bracket(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > cap {
        return Err(Error::CrossingCapExceeded { crossings: c, cap });
    }
    let mut states: HashMap<(Frontier, u32), LaurentPoly> = HashMap::new();
    states.insert((Vec::new(), 0), LaurentPoly::one());
    for x in sweep_order(d) {
        let crossing = &d.crossings()[x];
        let u = crossing.over.other().slots()[0];
        let e = |k: usize| crossing.slots[(u + k) % 4] as u32;
        let smoothings = [(1, [(e(0), e(1)), (e(2), e(3))]), (-1, [(e(0), e(3)), (e(1), e(2))])];
        let mut next: HashMap<(Frontier, u32), LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for ((frontier, loops), value) in &states {
            for (weight, joins) in &smoothings {
                let mut f = frontier.clone();
                let mut l = *loops;
                for &(a, b) in joins {
                    if connect(&mut f, a, b) {
                        l += 1;
                    }
                }
                next.entry((f, l)).or_default().add_assign_ref(&value.shift(*weight));
            }
        }
        states = next;
    }
    let delta = LaurentPoly::delta();
    let mut by_loops: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
    for ((frontier, loops), value) in states {
        debug_assert!(frontier.is_empty());
        by_loops.entry(loops + d.free_loops() as u32).or_default().add_assign_ref(&value);
    }
    let mut total = LaurentPoly::zero();
    for (loops, value) in by_loops {
        total.add_assign_ref(&(&value * &delta.pow(loops.saturating_sub(1))));
    }
    Ok(total)
}

/// `(−A³)^(−w) <D>` with `w` the self-writhe, which does not depend on how
/// components are oriented. Invariant under all Reidemeister moves of the
/// unoriented link; for knots it is the usual normalized bracket.
pub fn kauffman_f(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d, cap)?;
    let w = d.self_writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(bracket.shift(-3 * w) * LaurentPoly::monomial(sign, 0))
}

/// Evidence for link equality: equal links have equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFingerprint {
    pub components: usize,
    pub determinant: BigUint,
    /// `(p, number of Fox p-colorings)` for p = 2, 3, 5, 7.
    pub colorings: Vec<(u32, BigUint)>,
    pub kauffman_f: LaurentPoly,
}

impl InvariantFingerprint {
    pub fn of(d: &LinkDiagram, cap: usize) -> Result<Self> {
        Ok(InvariantFingerprint {
            components: d.components(),
            determinant: determinant(d),
            colorings: FINGERPRINT_PRIMES.iter().map(|&p| (p, colorings(d, p))).collect(),
            kauffman_f: kauffman_f(d, cap)?,
        })
    }

    pub fn unknot() -> Self {
        InvariantFingerprint {
            components: 1,
            determinant: BigUint::one(),
            colorings: FINGERPRINT_PRIMES.iter().map(|&p| (p, BigUint::from(p))).collect(),
            kauffman_f: LaurentPoly::one(),
        }
    }

    /// The fingerprint after adding a split unknotted component.
    pub fn with_split_unknot(&self) -> Self {
        InvariantFingerprint {
            components: self.components + 1,
            determinant: BigUint::zero(),
            colorings: self.colorings.iter().map(|(p, n)| (*p, n * *p)).collect(),
            kauffman_f: &self.kauffman_f * &LaurentPoly::delta(),
        }
    }

    pub fn coloring(&self, p: u32) -> Option<&BigUint> {
        self.colorings.iter().find(|(q, _)| *q == p).map(|(_, n)| n)
    }

    pub fn is_unknot(&self) -> bool {
        *self == Self::unknot()
    }

    /// Fingerprint of a `k`-component unlink.
    pub fn unlink(k: usize) -> Self {
        (1..k).fold(Self::unknot(), |f, _| f.with_split_unknot())
    }

    pub fn to_json(&self) -> String {
        let cols: Vec<String> = self.colorings.iter().map(|(p, n)| format!("\"{p}\":{n}")).collect();
        format!(
            "{{\"components\":{},\"determinant\":{},\"colorings\":{{{}}},\"kauffman_f\":\"{}\"}}",
            self.components,
            self.determinant,
            cols.join(","),
            self.kauffman_f
        )
    }
}

impl fmt::Display for InvariantFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.colorings.iter().map(|(p, n)| format!("{p}:{n}")).collect();
        write!(
            f,
            "components={} determinant={} colorings={{{}}} f={}",
            self.components,
            self.determinant,
            cols.join(","),
            self.kauffman_f
        )
    }
}
