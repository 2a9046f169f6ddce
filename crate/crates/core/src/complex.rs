//! Finite simplicial complexes and their enumerative invariants.
//!
//! Vertices are stored as dense indices `0..n_vertices` together with a
//! label map back to the ids the caller used. Faces are sorted index
//! vectors; every list of faces is kept in lexicographic order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face as a sorted list of vertex indices.
pub type Face = Vec<usize>;

pub struct SimplicialComplex {
    labels: Vec<i64>,
    facets: Vec<Face>,
    lattice: OnceLock<FaceLattice>,
}

struct FaceLattice {
    // by_size[s] holds the faces with s vertices, lexicographically sorted
    by_size: Vec<Vec<Face>>,
    index: HashMap<Face, usize>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            labels: self.labels.clone(),
            facets: self.facets.clone(),
            lattice: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("labels", &self.labels)
            .field("facets", &self.facets_labeled())
            .finish()
    }
}

/// On-disk form: `{"labels": [...], "facets": [[...], ...]}`. Labels are
/// optional on input; when present they fix the vertex universe.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<i64>>,
    pub facets: Vec<Vec<i64>>,
}

/// Face counts with the derived h- and g-vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    /// `f[i + 1]` is the number of `i`-dimensional faces, so `f[0] = 1`.
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
}

impl FVector {
    /// Number of faces of dimension `i` (with `i = -1` for the empty face).
    pub fn f(&self, i: isize) -> i64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.f.get(k).copied())
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    pub is_pure: bool,
    pub is_strongly_connected: bool,
    pub max_ridge_degree: usize,
    pub boundary_ridges: Vec<Face>,
    pub is_pseudomanifold: bool,
    pub is_without_boundary: bool,
    pub cone_apexes: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds a complex from raw vertex-id lists. Duplicates and faces
    /// contained in other listed faces are dropped.
    pub fn from_facets(raw: &[Vec<i64>]) -> Result<Self> {
        let mut labels: Vec<i64> = Vec::new();
        for face in raw {
            for &v in face {
                if v < 0 {
                    return Err(Error::NegativeVertex(v));
                }
                labels.push(v);
            }
        }
        labels.sort_unstable();
        labels.dedup();
        Self::with_labels(&labels, raw)
    }

    /// Like [`from_facets`](Self::from_facets) but with an explicit vertex
    /// universe, which may contain vertices lying in no face.
    pub fn with_labels(labels: &[i64], raw: &[Vec<i64>]) -> Result<Self> {
        if raw.iter().all(|f| f.is_empty()) {
            return Err(Error::EmptyComplex);
        }
        let mut labels = labels.to_vec();
        if let Some(&v) = labels.iter().find(|&&v| v < 0) {
            return Err(Error::NegativeVertex(v));
        }
        labels.sort_unstable();
        labels.dedup();
        let lookup: HashMap<i64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut facets = Vec::with_capacity(raw.len());
        for face in raw {
            let mut idx = Vec::with_capacity(face.len());
            for &v in face {
                if v < 0 {
                    return Err(Error::NegativeVertex(v));
                }
                idx.push(*lookup.get(&v).ok_or(Error::UnknownVertex(v))?);
            }
            facets.push(idx);
        }
        Ok(Self::from_indexed(labels, facets))
    }

    /// Builds a complex on the vertex universe `labels` from index sets.
    /// Accepts the complex `{∅}` (it arises as the link of a facet).
    ///
    /// Panics if an index is out of range.
    pub fn from_indexed(labels: Vec<i64>, facets: Vec<Face>) -> Self {
        let n = labels.len();
        let mut facets: Vec<Face> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                assert!(f.iter().all(|&v| v < n), "vertex index out of range");
                f
            })
            .collect();
        facets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { labels, facets: kept, lattice: OnceLock::new() }
    }

    /// The boundary of the simplex on `n` vertices labelled `0..n`.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
        Self::from_indexed((0..n as i64).collect(), facets)
    }

    /// The full simplex on `n` vertices labelled `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_indexed((0..n as i64).collect(), vec![(0..n).collect()])
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(s)?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        if file.facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        match &file.labels {
            Some(labels) => Self::with_labels(labels, &file.facets),
            None => Self::from_facets(&file.facets),
        }
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile { labels: Some(self.labels.clone()), facets: self.facets_labeled() }
    }

    /// Canonical JSON: sorted labels, sorted facets of sorted labels.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("complex serializes")
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> i64 {
        self.labels[v]
    }

    pub fn index_of(&self, label: i64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Translates a face given in labels to vertex indices.
    pub fn face_from_labels(&self, labels: &[i64]) -> Result<Face> {
        let mut face = labels
            .iter()
            .map(|&l| self.index_of(l).ok_or(Error::UnknownVertex(l)))
            .collect::<Result<Face>>()?;
        face.sort_unstable();
        face.dedup();
        Ok(face)
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facets_labeled(&self) -> Vec<Vec<i64>> {
        self.facets.iter().map(|f| f.iter().map(|&v| self.labels[v]).collect()).collect()
    }

    /// Dimension; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    fn lattice(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| {
            let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
            let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
            for facet in &self.facets {
                let k = facet.len();
                for mask in 0u64..(1u64 << k) {
                    let face: Face = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| facet[b]).collect();
                    sets[face.len()].insert(face);
                }
            }
            let by_size: Vec<Vec<Face>> = sets
                .into_iter()
                .map(|s| {
                    let mut v: Vec<Face> = s.into_iter().collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            let index = by_size
                .iter()
                .flat_map(|level| level.iter().enumerate().map(|(i, f)| (f.clone(), i)))
                .collect();
            FaceLattice { by_size, index }
        })
    }

    /// Faces of dimension `i` in canonical order; `i = -1` gives `[∅]`.
    pub fn faces(&self, i: isize) -> &[Face] {
        usize::try_from(i + 1)
            .ok()
            .and_then(|s| self.lattice().by_size.get(s))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Position of `face` among the faces of its dimension.
    pub fn face_index(&self, face: &[usize]) -> Option<usize> {
        self.lattice().index.get(face).copied()
    }

    /// `face` must be sorted.
    pub fn is_face(&self, face: &[usize]) -> bool {
        self.lattice().index.contains_key(face)
    }

    /// All faces, the empty face first, then by dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.lattice().by_size.iter().flatten()
    }

    pub fn fhg_vectors(&self) -> FVector {
        let d1 = (self.dim() + 1) as usize;
        let f: Vec<i64> = (0..=d1).map(|s| self.lattice().by_size[s].len() as i64).collect();
        // sum_i f_{i-1} (t-1)^{d+1-i} = sum_i h_i t^{d+1-i}
        let h: Vec<i64> = (0..=d1)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(d1 - i, k - i) as i64 * f[i]
                    })
                    .sum()
            })
            .collect();
        let glen = d1.div_ceil(2);
        let g = (0..=glen)
            .map(|i| if i == 0 { 1 } else { h.get(i).copied().unwrap_or(0) - h[i - 1] })
            .collect();
        FVector { f, h, g }
    }

    /// `lk(σ) = {τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅}` on the same vertex universe.
    pub fn link(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        sigma.dedup();
        if !self.is_face(&sigma) {
            return Err(Error::NotAFace(sigma));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| is_subset(&sigma, f))
            .map(|f| f.iter().copied().filter(|v| sigma.binary_search(v).is_err()).collect())
            .collect();
        Ok(Self::from_indexed(self.labels.clone(), facets))
    }

    /// Inclusion-minimal non-faces, i.e. the generators of the
    /// Stanley–Reisner ideal, sorted by size then lexicographically.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let n = self.n_vertices();
        let mut out: Vec<Face> = (0..n).filter(|&v| !self.is_face(&[v])).map(|v| vec![v]).collect();
        let max_size = (self.dim() + 2).max(0) as usize;
        for size in 2..=max_size {
            let mut level = Vec::new();
            for base in &self.lattice().by_size[size - 1] {
                let last = *base.last().expect("nonempty base");
                for v in last + 1..n {
                    let mut cand = base.clone();
                    cand.push(v);
                    if self.is_face(&cand) {
                        continue;
                    }
                    let boundary_ok = (0..size).all(|skip| {
                        let sub: Face = cand.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                        self.is_face(&sub)
                    });
                    if boundary_ok {
                        level.push(cand);
                    }
                }
            }
            level.sort_unstable();
            out.extend(level);
        }
        out
    }

    pub fn classify_pseudomanifold(&self) -> PseudomanifoldReport {
        let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
        let is_pure = self.facets.iter().all(|f| f.len() == top);
        let top_facets: Vec<&Face> = self.facets.iter().filter(|f| f.len() == top).collect();

        let mut ridge_owners: HashMap<Face, Vec<usize>> = HashMap::new();
        if top > 0 {
            for (i, f) in top_facets.iter().enumerate() {
                for skip in 0..top {
                    let ridge: Face = f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                    ridge_owners.entry(ridge).or_default().push(i);
                }
            }
        }
        let max_ridge_degree = ridge_owners.values().map(Vec::len).max().unwrap_or(0);
        let mut boundary_ridges: Vec<Face> =
            ridge_owners.iter().filter(|(_, o)| o.len() == 1).map(|(r, _)| r.clone()).collect();
        boundary_ridges.sort_unstable();

        // facet-ridge adjacency
        let mut adj = vec![Vec::new(); top_facets.len()];
        for owners in ridge_owners.values() {
            for &a in owners {
                for &b in owners {
                    if a != b {
                        adj[a].push(b);
                    }
                }
            }
        }
        let mut seen = vec![false; top_facets.len()];
        let mut queue = VecDeque::new();
        if !top_facets.is_empty() {
            seen[0] = true;
            queue.push_back(0);
        }
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        let is_strongly_connected = is_pure && seen.iter().all(|&s| s);
        let is_pseudomanifold = is_pure && is_strongly_connected && max_ridge_degree <= 2;
        let is_without_boundary = is_pseudomanifold && boundary_ridges.is_empty();
        let cone_apexes = (0..self.n_vertices())
            .filter(|v| self.facets.iter().all(|f| f.binary_search(v).is_ok()))
            .collect();
        PseudomanifoldReport {
            is_pure,
            is_strongly_connected,
            max_ridge_degree,
            boundary_ridges,
            is_pseudomanifold,
            is_without_boundary,
            cone_apexes,
        }
    }
}

/// Both slices sorted.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets;

    fn c(raw: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(&raw.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn triangle_boundary() {
        let t = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(t.facets().len(), 3);
        assert_eq!(t.dim(), 1);
        assert_eq!(t.facets_labeled(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn containment_is_pruned() {
        let t = c(&[&[1, 2], &[1]]);
        assert_eq!(t.facets_labeled(), vec![vec![1, 2]]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(SimplicialComplex::from_facets(&[]), Err(Error::EmptyComplex)));
        assert!(matches!(SimplicialComplex::from_facets(&[vec![]]), Err(Error::EmptyComplex)));
        assert!(matches!(SimplicialComplex::from_facets(&[vec![1, -2]]), Err(Error::NegativeVertex(-2))));
        assert!(matches!(
            SimplicialComplex::with_labels(&[1, 2], &[vec![1, 3]]),
            Err(Error::UnknownVertex(3))
        ));
    }

    #[test]
    fn rp2_vectors() {
        let s = datasets::rp2();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.facets().len(), 10);
        let fv = s.fhg_vectors();
        assert_eq!(fv.f, vec![1, 6, 15, 10]);
        assert_eq!(fv.h, vec![1, 3, 6, 0]);
        assert_eq!(fv.g, vec![1, 2, 3]);
    }

    #[test]
    fn single_vertex_vectors() {
        let fv = c(&[&[7]]).fhg_vectors();
        assert_eq!(fv.f, vec![1, 1]);
        assert_eq!(fv.h, vec![1, 0]);
    }

    #[test]
    fn gamma_vectors_are_symmetric() {
        let fv = datasets::gamma().fhg_vectors();
        assert_eq!(fv.f, vec![1, 10, 24, 16]);
        assert_eq!(fv.h, vec![1, 7, 7, 1]);
        let d1 = fv.h.len() - 1;
        for i in 0..=d1 {
            assert_eq!(fv.h[i], fv.h[d1 - i]);
        }
    }

    #[test]
    fn links() {
        let s = datasets::rp2();
        assert_eq!(s.link(&[]).unwrap(), s);
        let facet = s.facets()[0].clone();
        let l = s.link(&facet).unwrap();
        assert_eq!(l.dim(), -1);
        assert_eq!(l.facets(), &[Vec::<usize>::new()]);

        // brute force: facets of Σ through label 1, with 1 removed
        let v1 = s.index_of(1).unwrap();
        let lk = s.link(&[v1]).unwrap();
        let mut expected: Vec<Vec<i64>> = s
            .facets_labeled()
            .into_iter()
            .filter(|f| f.contains(&1))
            .map(|f| f.into_iter().filter(|&v| v != 1).collect())
            .collect();
        expected.sort();
        assert_eq!(lk.facets_labeled(), expected);
        assert_eq!(expected.len(), 5);
        let rep = lk.classify_pseudomanifold();
        assert!(rep.is_without_boundary);
        for v in 2..=6 {
            assert_eq!(expected.iter().filter(|e| e.contains(&v)).count(), 2);
        }

        assert!(matches!(s.link(&[0, 1, 2, 3]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn minimal_nonfaces_small() {
        let t = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(t.minimal_nonfaces(), vec![vec![0, 1, 2]]);
        for n in 2..7 {
            let b = SimplicialComplex::simplex_boundary(n);
            assert_eq!(b.minimal_nonfaces(), vec![(0..n).collect::<Vec<_>>()]);
        }
        let ghost = SimplicialComplex::with_labels(&[0, 1, 2], &[vec![0, 1]]).unwrap();
        assert_eq!(ghost.minimal_nonfaces(), vec![vec![2]]);
    }

    #[test]
    fn rp2_minimal_nonfaces_match_brute_force() {
        let s = datasets::rp2();
        let mut brute = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                assert!(s.is_face(&[a, b]));
                for c in b + 1..6 {
                    if !s.is_face(&[a, b, c]) {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(brute.len(), 10);
        assert_eq!(s.minimal_nonfaces(), brute);
    }

    #[test]
    fn pseudomanifold_classification() {
        let s = datasets::rp2().classify_pseudomanifold();
        assert!(s.is_pseudomanifold && s.is_without_boundary);
        assert!(s.cone_apexes.is_empty());

        let path = c(&[&[1, 2], &[2, 3]]);
        let rep = path.classify_pseudomanifold();
        assert!(rep.is_pseudomanifold && !rep.is_without_boundary);
        assert_eq!(rep.boundary_ridges, vec![vec![0], vec![2]]);
        assert_eq!(rep.cone_apexes, vec![1]);

        let lam = datasets::pinched_torus().classify_pseudomanifold();
        assert!(lam.is_pseudomanifold && lam.is_without_boundary);

        let bowtie = c(&[&[1, 2, 3], &[1, 4, 5]]);
        let rep = bowtie.classify_pseudomanifold();
        assert!(rep.is_pure && !rep.is_strongly_connected && !rep.is_pseudomanifold);

        let mixed = c(&[&[1, 2, 3], &[3, 4]]);
        assert!(!mixed.classify_pseudomanifold().is_pure);
    }

    #[test]
    fn ridge_count_of_closed_pseudomanifolds() {
        for cx in [datasets::rp2(), datasets::pinched_torus(), datasets::gamma()] {
            let d = cx.dim();
            let fv = cx.fhg_vectors();
            assert_eq!(2 * fv.f(d - 1), (d + 1) as i64 * fv.f(d));
        }
    }

    #[test]
    fn json_round_trip_is_idempotent() {
        let g = datasets::gamma();
        let s = g.to_json_string();
        let again = SimplicialComplex::from_json_str(&s).unwrap();
        assert_eq!(again, g);
        assert_eq!(again.to_json_string(), s);
    }
}
