//! Finite simplicial complexes and their reduced homology over GF(2) or
//! the rationals.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};
use serde::{Deserialize, Serialize};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[default]
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "q")]
    Rationals,
}

impl std::str::FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gf2" | "GF2" | "2" => Ok(Field::Gf2),
            "q" | "Q" | "rationals" => Ok(Field::Rationals),
            other => Err(format!("unknown field {other:?}; expected gf2 or q")),
        }
    }
}

/// A simplicial complex stored by its facets, as vertex bitmasks.
///
/// The void complex has no faces at all (no facets); the irrelevant complex
/// has only the empty face (a single empty facet).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: u64,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(ground: u64) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// Complex generated by the given faces; non-maximal ones are dropped.
    pub fn from_facets(ground: u64, faces: impl IntoIterator<Item = u64>) -> Self {
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
        faces.dedup();
        let mut facets: Vec<u64> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|&g| f & !g == 0) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { ground, facets }
    }

    pub fn ground(&self) -> Vec<usize> {
        bits(self.ground).collect()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bits(f).collect()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension of the largest facet; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// All faces grouped by dimension: entry `k` holds the faces with `k`
    /// vertices (dimension `k - 1`), each list sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            // Enumerate all submasks of f.
            let mut s = f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut out = vec![Vec::new(); (dim + 2) as usize];
        for s in seen {
            out[s.count_ones() as usize].push(s);
        }
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }

    /// Ranks of `H̃_d` for `d = -1, 0, ..., dim`; entry `k` is `H̃_{k-1}`.
    /// Empty for the void complex.
    pub fn reduced_homology(&self, field: Field) -> Vec<usize> {
        let faces = self.faces_by_size();
        if faces.is_empty() {
            return Vec::new();
        }
        // rank of the boundary map from size-k faces to size-(k-1) faces
        let mut ranks = vec![0usize; faces.len() + 1];
        for k in 1..faces.len() {
            ranks[k] = boundary_rank(&faces[k], &faces[k - 1], field);
        }
        (0..faces.len())
            .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }

    /// `Σ (-1)^d f_d` over all faces, including the empty face at `d = -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(k, level)| {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sign * level.len() as i64
            })
            .sum()
    }

    /// Rank of `H̃_0`: connected components minus one, or zero when the
    /// complex has no vertices.
    pub fn reduced_h0(&self) -> usize {
        let nonempty: Vec<u64> = self.facets.iter().copied().filter(|&f| f != 0).collect();
        if nonempty.is_empty() {
            return 0;
        }
        let mut parent: Vec<usize> = (0..nonempty.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nxt = p[y];
                p[y] = r;
                y = nxt;
            }
            r
        }
        let mut components = nonempty.len();
        for i in 0..nonempty.len() {
            for j in i + 1..nonempty.len() {
                if nonempty[i] & nonempty[j] != 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                        components -= 1;
                    }
                }
            }
        }
        components - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

/// Rank of the simplicial boundary from `faces` to `lower` (faces with one
/// vertex fewer, sorted).
fn boundary_rank(faces: &[u64], lower: &[u64], field: Field) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    match field {
        Field::Gf2 => {
            let words = lower.len().div_ceil(64);
            let rows: Vec<Vec<u64>> = faces
                .iter()
                .map(|&f| {
                    let mut row = vec![0u64; words];
                    for v in bits(f) {
                        let idx = lower.binary_search(&(f & !(1 << v))).expect("face of complex");
                        row[idx / 64] |= 1 << (idx % 64);
                    }
                    row
                })
                .collect();
            gf2_rank(rows)
        }
        Field::Rationals => {
            let rows: Vec<Vec<i64>> = faces
                .iter()
                .map(|&f| {
                    let mut row = vec![0i64; lower.len()];
                    for (pos, v) in bits(f).enumerate() {
                        let idx = lower.binary_search(&(f & !(1 << v))).expect("face of complex");
                        row[idx] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                    row
                })
                .collect();
            rational_rank(rows)
        }
    }
}

fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..words * 64 {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            if rows[r][w] & b != 0 {
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination,
/// retried with big integers if machine integers overflow.
pub fn rational_rank(rows: Vec<Vec<i64>>) -> usize {
    if let Some(r) = bareiss_rank(rows.clone()) {
        return r;
    }
    let big = rows
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_rank(big).expect("big integers do not overflow")
}

fn bareiss_rank<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            for c in col..cols {
                let a = pivot.checked_mul(&rows[r][c])?;
                let b = factor.checked_mul(&rows[rank][c])?;
                // Bareiss: the division by the previous pivot is exact.
                rows[r][c] = a.checked_sub(&b)?.div_floor(&prev);
            }
            // Columns left of `col` are already zero below the pivot rows.
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | 1 << v)
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_facets(0b11, [mask(&[0]), mask(&[1])]);
        assert_eq!(c.reduced_homology(Field::Gf2), vec![0, 1]);
        assert_eq!(c.reduced_homology(Field::Rationals), vec![0, 1]);
        assert_eq!(c.reduced_h0(), 1);
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::from_facets(
            0b111,
            [mask(&[0, 1]), mask(&[1, 2]), mask(&[0, 2])],
        );
        for f in [Field::Gf2, Field::Rationals] {
            assert_eq!(c.reduced_homology(f), vec![0, 0, 1]);
        }
    }

    #[test]
    fn contractible_path() {
        let c = SimplicialComplex::from_facets(
            0b1111,
            [mask(&[0, 1]), mask(&[0, 3]), mask(&[2, 3])],
        );
        assert!(c.reduced_homology(Field::Rationals).iter().all(|&r| r == 0));
        assert_eq!(c.reduced_h0(), 0);
    }

    #[test]
    fn void_and_irrelevant() {
        let v = SimplicialComplex::void(0b11);
        assert!(v.is_void());
        assert!(v.reduced_homology(Field::Gf2).is_empty());
        let i = SimplicialComplex::from_facets(0b11, [0]);
        assert!(i.is_irrelevant());
        assert_eq!(i.reduced_homology(Field::Gf2), vec![1]);
        assert_eq!(i.reduced_h0(), 0);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2: H̃_1 and H̃_2 are Z/2-torsion
        // artefacts, visible over GF(2) only.
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let c = SimplicialComplex::from_facets(0b111111, tris.iter().map(|t| mask(t)));
        assert_eq!(c.reduced_homology(Field::Gf2), vec![0, 0, 1, 1]);
        assert_eq!(c.reduced_homology(Field::Rationals), vec![0, 0, 0, 0]);
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        let c = SimplicialComplex::from_facets(
            0b11111,
            [mask(&[0, 1, 2]), mask(&[2, 3]), mask(&[3, 4]), mask(&[4, 2])],
        );
        let h = c.reduced_homology(Field::Rationals);
        let alt: i64 = h
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum();
        assert_eq!(alt, c.reduced_euler_characteristic());
        assert_eq!(h, vec![0, 0, 1, 0]);
    }

    #[test]
    fn rational_rank_handles_large_entries() {
        let rows = vec![
            vec![i64::MAX / 2, 3, 1],
            vec![5, i64::MAX / 3, 7],
            vec![1, 1, 1],
        ];
        assert_eq!(rational_rank(rows), 3);
        assert_eq!(rational_rank(vec![vec![2, 4], vec![1, 2]]), 1);
    }
}
