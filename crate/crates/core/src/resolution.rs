//! Minimal embedded resolution of unibranched plane curve germs and the
//! cyclic-cover data attached to its rupture divisors.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::gcd;
use crate::belyi::{self, BelyiCover};
use crate::error::{Error, Result};
use crate::singularity::PuiseuxCharacteristic;
use crate::CyclotomicProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub id: usize,
    /// Multiplicity of the pulled-back germ along the divisor.
    pub multiplicity: u64,
    pub is_strict_transform: bool,
}

/// Dual graph of the total transform: one node per exceptional divisor, in
/// blow-up order, followed by a single node for the strict transform.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTree {
    nodes: Vec<TreeNode>,
    edges: Vec<(usize, usize)>,
    rupture_ids: Vec<usize>,
}

impl ResolutionTree {
    /// Builds and validates a tree from raw parts. Node ids must be
    /// `0..nodes.len()` in order; rupture nodes are derived.
    pub fn from_parts(nodes: Vec<TreeNode>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = nodes.len();
        for (i, node) in nodes.iter().enumerate() {
            if node.id != i {
                return Err(Error::precondition(format!("node {i} carries id {}", node.id)));
            }
            if node.multiplicity == 0 {
                return Err(Error::precondition(format!("node {i} has multiplicity 0")));
            }
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges.iter() {
            if u >= n || v >= n || u == v {
                return Err(Error::precondition(format!("bad edge ({u}, {v})")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::precondition(format!("duplicate edge ({u}, {v})")));
            }
        }
        let strict: Vec<&TreeNode> = nodes.iter().filter(|x| x.is_strict_transform).collect();
        if strict.len() != 1 {
            return Err(Error::precondition("exactly one strict transform node is required"));
        }
        if strict[0].multiplicity != 1 {
            return Err(Error::precondition("the strict transform has multiplicity 1"));
        }
        let mut tree = ResolutionTree {
            nodes,
            edges: set.into_iter().collect(),
            rupture_ids: Vec::new(),
        };
        if !tree.is_tree() {
            return Err(Error::precondition("the dual graph is not a tree"));
        }
        if tree.valency(tree.strict_transform()) != 1 {
            return Err(Error::precondition("the strict transform meets exactly one divisor"));
        }
        tree.rupture_ids = (0..n)
            .filter(|&i| !tree.nodes[i].is_strict_transform && tree.valency(i) >= 3)
            .collect();
        Ok(tree)
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rupture_ids(&self) -> &[usize] {
        &self.rupture_ids
    }

    pub fn multiplicity(&self, id: usize) -> u64 {
        self.nodes[id].multiplicity
    }

    pub fn strict_transform(&self) -> usize {
        self.nodes
            .iter()
            .position(|x| x.is_strict_transform)
            .expect("validated")
    }

    /// Exceptional divisors, excluding the strict transform.
    pub fn exceptional(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|x| !x.is_strict_transform)
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                if u == id {
                    Some(v)
                } else if v == id {
                    Some(u)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn valency(&self, id: usize) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == id || v == id).count()
    }

    /// Connected with `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        self.bfs_parents(0).iter().all(Option::is_some)
    }

    /// Parent pointers of a breadth-first search from `root`; the root
    /// points to itself.
    fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.nodes.len()];
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if parent[w].is_none() {
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Neighbors of `id` ordered as: toward the first exceptional divisor,
    /// toward the strict transform, then the rest by decreasing
    /// multiplicity.
    pub fn oriented_neighbors(&self, id: usize) -> Vec<usize> {
        let to_root = self.bfs_parents(0)[id].filter(|p| *p != id);
        let to_strict = self.bfs_parents(self.strict_transform())[id].filter(|p| *p != id);
        let mut out: Vec<usize> = Vec::new();
        for x in [to_root, to_strict].into_iter().flatten() {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        let mut rest: Vec<usize> = self
            .neighbors(id)
            .into_iter()
            .filter(|x| !out.contains(x))
            .collect();
        rest.sort_by_key(|x| (std::cmp::Reverse(self.multiplicity(*x)), *x));
        out.extend(rest);
        out
    }
}

/// Local state of the branch at the point about to be blown up: in local
/// coordinates `(z, w)` the branch has `ord z = a`, `ord w = b`, and the
/// divisors through the point, if any, are `{z = 0}` and `{w = 0}`.
struct BlowUpState {
    a: u64,
    b: u64,
    on_z: Option<usize>,
    on_w: Option<usize>,
    /// Orders (in the branch parameter) of the remaining characteristic terms
    /// relative to the previous one.
    gaps: VecDeque<u64>,
}

impl BlowUpState {
    fn divisors_through(&self) -> Vec<usize> {
        self.on_z.into_iter().chain(self.on_w).collect()
    }

    /// Smooth branch meeting at most one divisor, transversally.
    fn is_normal_crossing(&self) -> bool {
        if !self.gaps.is_empty() || self.a.min(self.b) != 1 {
            return false;
        }
        match (self.on_z, self.on_w) {
            (Some(_), Some(_)) | (None, None) => false,
            (Some(_), None) => self.a == 1,
            (None, Some(_)) => self.b == 1,
        }
    }
}

/// Runs the blow-up sequence: each step is one subtraction of the Euclidean
/// algorithm on the local orders, and each completed block of a
/// characteristic pair moves to a free point on the newest divisor.
pub fn resolution_tree(pc: &PuiseuxCharacteristic) -> ResolutionTree {
    let (n, betas) = pc.characteristic_exponents();
    let mut state = BlowUpState {
        a: n,
        b: betas[0],
        on_z: None,
        on_w: None,
        gaps: betas.windows(2).map(|w| w[1] - w[0]).collect(),
    };
    let mut mult: Vec<u64> = Vec::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let attach = loop {
        if state.is_normal_crossing() {
            break state.divisors_through()[0];
        }
        let through = state.divisors_through();
        let e = state.a.min(state.b);
        let id = mult.len();
        mult.push(e + through.iter().map(|d| mult[*d]).sum::<u64>());
        for d in through.iter() {
            edges.insert((*d, id));
        }
        if let [x, y] = through[..] {
            edges.remove(&(x.min(y), x.max(y)));
        }
        use std::cmp::Ordering::*;
        match state.a.cmp(&state.b) {
            Less => {
                state.b -= state.a;
                state.on_z = Some(id);
            }
            Greater => {
                state.a -= state.b;
                state.on_w = Some(id);
            }
            Equal => match state.gaps.pop_front() {
                None => break id,
                Some(gap) => {
                    state.b = gap;
                    state.on_z = Some(id);
                    state.on_w = None;
                }
            },
        }
    };
    let strict = mult.len();
    let mut nodes: Vec<TreeNode> = mult
        .iter()
        .enumerate()
        .map(|(id, m)| TreeNode {
            id,
            multiplicity: *m,
            is_strict_transform: false,
        })
        .collect();
    nodes.push(TreeNode {
        id: strict,
        multiplicity: 1,
        is_strict_transform: true,
    });
    edges.insert((attach, strict));
    ResolutionTree::from_parts(nodes, edges.into_iter().collect())
        .expect("blow-up simulation produces a valid tree")
}

/// Monodromy characteristic polynomial from the resolution:
/// `Δ(t) = (t - 1) · Π_E (t^{m(E)} - 1)^{v(E) - 2}` over exceptional `E`,
/// where `v(E)` counts all neighbors including the strict transform
/// (so `2 - v(E)` is the Euler characteristic of `E` minus its
/// intersection points).
pub fn acampo_charpoly(rt: &ResolutionTree) -> Result<CyclotomicProduct> {
    if !rt.is_tree() {
        return Err(Error::precondition("the dual graph is not a tree"));
    }
    let mut exps: Vec<(u64, i64)> = vec![(1, 1)];
    for node in rt.exceptional() {
        let v = rt.valency(node.id) as i64;
        if v != 2 {
            exps.push((node.multiplicity, v - 2));
        }
    }
    CyclotomicProduct::from_binomial_exponents(exps)
        .map_err(|e| Error::Computation(format!("resolution data is inconsistent: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlbaneseFactor {
    pub rupture_id: usize,
    pub multiplicity: u64,
    pub belyi: BelyiCover,
    pub genus: u64,
    pub cm_conductors: Vec<u64>,
    /// Indices `j` with `ω_d^j` acting on holomorphic forms.
    pub cm_exponents: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedRupture {
    pub rupture_id: usize,
    pub multiplicity: u64,
    pub cover_degree: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalAlbaneseReport {
    pub n: u64,
    pub factors: Vec<AlbaneseFactor>,
    pub skipped: Vec<SkippedRupture>,
    pub total_dimension: u64,
}

/// Jacobians of the positive-genus exceptional curves over the rupture
/// divisors in the resolution of `z^N = f(x, y)`.
pub fn local_albanese(pc: &PuiseuxCharacteristic, n: u64) -> Result<LocalAlbaneseReport> {
    if n < 2 {
        return Err(Error::precondition(format!("cover degree N = {n} must be at least 2")));
    }
    let tree = resolution_tree(pc);
    let mut factors = Vec::new();
    let mut skipped = Vec::new();
    for &id in tree.rupture_ids() {
        let m = tree.multiplicity(id);
        let d = gcd(n, m);
        let skip = |reason: &str| SkippedRupture {
            rupture_id: id,
            multiplicity: m,
            cover_degree: d,
            reason: reason.to_string(),
        };
        if d < 2 {
            skipped.push(skip("gcd(N, m) = 1: the cover is trivial"));
            continue;
        }
        let neighbors = tree.oriented_neighbors(id);
        if neighbors.len() != 3 {
            return Err(Error::Computation(format!(
                "rupture divisor {id} has valency {}",
                neighbors.len()
            )));
        }
        let mut residues: Vec<u64> = neighbors.iter().map(|x| tree.multiplicity(*x) % d).collect();
        if residues.contains(&0) {
            skipped.push(skip("at most two branch points: genus 0"));
            continue;
        }
        let sum: u64 = residues.iter().sum();
        if sum == 2 * d {
            residues.iter_mut().for_each(|r| *r = d - *r);
        } else if sum != d {
            return Err(Error::Computation(format!(
                "branching exponents {residues:?} do not sum to a multiple of {d}"
            )));
        }
        let (a, b, c) = (residues[0], residues[1], residues[2]);
        let copies = gcd(gcd(a, b), gcd(c, d));
        let cover = BelyiCover::new(a / copies, b / copies, c / copies, d / copies)?;
        let genus = belyi::genus(&cover);
        if genus == 0 {
            skipped.push(skip("genus 0"));
            continue;
        }
        let factor = AlbaneseFactor {
            rupture_id: id,
            multiplicity: m,
            belyi: cover,
            genus,
            cm_conductors: belyi::cm_conductors(&cover)?,
            cm_exponents: belyi::cm_exponents(&cover)?,
        };
        for _ in 0..copies {
            factors.push(factor.clone());
        }
    }
    let total_dimension = factors.iter().map(|f| f.genus).sum();
    Ok(LocalAlbaneseReport {
        n,
        factors,
        skipped,
        total_dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularity::{charpoly_one_pair, charpoly_puiseux};

    fn pc(pairs: &[(u64, u64)]) -> PuiseuxCharacteristic {
        PuiseuxCharacteristic::new(pairs.to_vec()).unwrap()
    }

    fn neighbor_multiplicities(t: &ResolutionTree, id: usize) -> Vec<u64> {
        let mut v: Vec<u64> = t.neighbors(id).iter().map(|x| t.multiplicity(*x)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn x2_plus_y5() {
        let t = resolution_tree(&pc(&[(5, 2)]));
        assert_eq!(t.rupture_ids().len(), 1);
        let r = t.rupture_ids()[0];
        assert_eq!(t.multiplicity(r), 10);
        assert_eq!(neighbor_multiplicities(&t, r), vec![1, 4, 5]);
        let strict = t.strict_transform();
        assert!(t.neighbors(r).contains(&strict));
    }

    #[test]
    fn cusp() {
        let t = resolution_tree(&pc(&[(3, 2)]));
        let mults: Vec<u64> = t.exceptional().map(|x| x.multiplicity).collect();
        assert_eq!(mults, vec![2, 3, 6]);
        let r = t.rupture_ids()[0];
        assert_eq!(neighbor_multiplicities(&t, r), vec![1, 2, 3]);
    }

    #[test]
    fn two_pairs_give_two_ruptures() {
        let t = resolution_tree(&pc(&[(3, 2), (6, 5)]));
        assert_eq!(t.rupture_ids().len(), 2);
        for r in t.rupture_ids() {
            assert_eq!(t.valency(*r), 3);
        }
    }

    #[test]
    fn acampo_examples() {
        for (p, q) in [(3, 2), (5, 2)] {
            let t = resolution_tree(&pc(&[(p, q)]));
            assert_eq!(acampo_charpoly(&t).unwrap(), charpoly_one_pair(p, q).unwrap());
        }
        let two = pc(&[(3, 2), (6, 5)]);
        assert_eq!(
            acampo_charpoly(&resolution_tree(&two)).unwrap(),
            charpoly_puiseux(&two).unwrap()
        );
    }

    #[test]
    fn malformed_trees_are_rejected() {
        let node = |id, m, s| TreeNode {
            id,
            multiplicity: m,
            is_strict_transform: s,
        };
        // cycle
        let nodes = vec![node(0, 2, false), node(1, 3, false), node(2, 6, false), node(3, 1, true)];
        assert!(ResolutionTree::from_parts(nodes.clone(), vec![(0, 1), (1, 2), (2, 0), (2, 3)]).is_err());
        // disconnected
        assert!(ResolutionTree::from_parts(nodes.clone(), vec![(0, 2), (2, 3)]).is_err());
        // no strict transform
        let bare = vec![node(0, 2, false), node(1, 3, false)];
        assert!(ResolutionTree::from_parts(bare, vec![(0, 1)]).is_err());
        // valid
        let ok = ResolutionTree::from_parts(nodes, vec![(0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(ok.rupture_ids(), &[2]);
        assert_eq!(acampo_charpoly(&ok).unwrap(), charpoly_one_pair(2, 3).unwrap());
    }

    #[test]
    fn albanese_of_x2_plus_y5() {
        let rep = local_albanese(&pc(&[(5, 2)]), 10).unwrap();
        assert_eq!(rep.factors.len(), 1);
        let f = &rep.factors[0];
        assert_eq!(f.belyi, BelyiCover::new(4, 1, 5, 10).unwrap());
        assert_eq!(f.genus, 2);
        assert_eq!(f.cm_conductors, vec![10]);
        assert_eq!(f.cm_exponents, vec![1, 3]);
        assert_eq!(rep.total_dimension, 2);
    }

    #[test]
    fn albanese_of_cusp() {
        let rep = local_albanese(&pc(&[(3, 2)]), 6).unwrap();
        assert_eq!(rep.factors.len(), 1);
        assert_eq!(rep.factors[0].genus, 1);
        let rep = local_albanese(&pc(&[(3, 2)]), 5).unwrap();
        assert!(rep.factors.is_empty());
        assert_eq!(rep.skipped.len(), 1);
        assert!(local_albanese(&pc(&[(3, 2)]), 1).is_err());
    }

    #[test]
    fn one_pair_dimension() {
        for q in 3..=20u64 {
            for p in 2..q {
                if gcd(p, q) != 1 {
                    continue;
                }
                let rep = local_albanese(&pc(&[(q, p)]), p * q).unwrap();
                assert_eq!(rep.total_dimension, (p - 1) * (q - 1) / 2, "({q}, {p})");
            }
        }
    }
}
