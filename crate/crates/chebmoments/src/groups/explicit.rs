//! Groups given by an explicit multiplication table, and their character
//! tables via the Burnside class-algebra method: the class-multiplication
//! matrices commute and their joint eigenvectors are (rescaled) character
//! columns. Simultaneous diagonalization proceeds by recursive eigenspace
//! splitting with a real-symmetric solver on the 2r x 2r real embedding of
//! the commuting Hermitian family.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::{ConjClass, Element};
use crate::error::{Error, Result};

/// Multiplication table of a finite group; `table[i*n + j] = i*j`.
#[derive(Debug, Clone)]
pub struct MultTable {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    class_of: Vec<usize>,
    class_sizes: Vec<u64>,
    class_reps: Vec<usize>,
}

/// Maximum accepted order for explicit groups (conjugacy classes are O(n^2)).
pub const MAX_EXPLICIT_ORDER: usize = 2000;

impl MultTable {
    /// Build from a row-major table; validates group axioms.
    pub fn new(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 || table.len() != n * n {
            return Err(Error::InconsistentTable(format!(
                "table length {} != n^2 for n = {n}",
                table.len()
            )));
        }
        if n > MAX_EXPLICIT_ORDER {
            return Err(Error::InconsistentTable(format!(
                "order {n} exceeds cap {MAX_EXPLICIT_ORDER}"
            )));
        }
        if table.iter().any(|&x| x >= n) {
            return Err(Error::InconsistentTable("entry out of range".into()));
        }
        // identity
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
            .ok_or_else(|| Error::InconsistentTable("no identity element".into()))?;
        // inverses + Latin square property
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            let row: &[usize] = &table[i * n..(i + 1) * n];
            let mut seen = vec![false; n];
            for (j, &v) in row.iter().enumerate() {
                if seen[v] {
                    return Err(Error::InconsistentTable(format!(
                        "row {i} is not a permutation"
                    )));
                }
                seen[v] = true;
                if v == identity {
                    inverse[i] = j;
                }
            }
        }
        if inverse.contains(&usize::MAX) {
            return Err(Error::InconsistentTable("missing inverse".into()));
        }
        let mut mt = MultTable {
            n,
            table,
            identity,
            inverse,
            class_of: Vec::new(),
            class_sizes: Vec::new(),
            class_reps: Vec::new(),
        };
        mt.check_associativity()?;
        mt.compute_classes();
        Ok(mt)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.n;
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InconsistentTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Deterministic sample for large tables (full check is O(n^3)).
            let mut x = 0x9e3779b97f4a7c15u64;
            for _ in 0..200_000 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (x >> 33) as usize % n;
                let b = (x >> 13) as usize % n;
                let c = x as usize % n;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::InconsistentTable(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn compute_classes(&mut self) {
        let n = self.n;
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        // identity first so class 0 is always {e}
        let order: Vec<usize> = std::iter::once(self.identity)
            .chain((0..n).filter(|&g| g != self.identity))
            .collect();
        for g in order {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            let mut size = 0u64;
            for h in 0..n {
                let conj = self.mul(self.mul(h, g), self.inverse[h]);
                if class_of[conj] == usize::MAX {
                    class_of[conj] = id;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        self.class_of = class_of;
        self.class_sizes = sizes;
        self.class_reps = reps;
    }

    pub fn validate(&self) -> Result<()> {
        // constructed tables are already validated
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        self.class_reps
            .iter()
            .zip(&self.class_sizes)
            .enumerate()
            .map(|(i, (&rep, &size))| ConjClass {
                rep: Element::Idx(rep),
                size,
                label: format!("C{i}"),
            })
            .collect()
    }

    /// Character table by the Burnside method. Rows are characters (order:
    /// trivial first, then by ascending degree with deterministic
    /// tie-breaking on values), columns follow the class order.
    pub fn character_table_values(&self) -> Result<Vec<Vec<Complex64>>> {
        let r = self.class_reps.len();
        let n = self.n as f64;
        // class multiplication constants: a[j][k][i] with
        // C_j * C_i = sum_k a_{jik} C_k; computed from triple counts.
        let mut counts = vec![0u64; r * r * r];
        for x in 0..self.n {
            let cx = self.class_of[x];
            for y in 0..self.n {
                let cy = self.class_of[y];
                let cz = self.class_of[self.mul(x, y)];
                counts[(cx * r + cy) * r + cz] += 1;
            }
        }
        // M_j: (M_j)_{k,i} = a_{jik} = counts[j][i][k] / |C_k|
        // Scale to B_j = D^{1/2} M_j D^{-1/2}, D = diag(|C_i|); then
        // B_{j^{-1}} = B_j^T (real entries), so symmetric/antisymmetric parts
        // give a commuting family of Hermitian operators.
        let sizes: Vec<f64> = self.class_sizes.iter().map(|&s| s as f64).collect();
        let inv_class: Vec<usize> = self
            .class_reps
            .iter()
            .map(|&g| self.class_of[self.inverse[g]])
            .collect();
        let mut bs: Vec<DMatrix<f64>> = Vec::with_capacity(r);
        for j in 0..r {
            let mut b = DMatrix::zeros(r, r);
            for i in 0..r {
                for k in 0..r {
                    let a_jik = counts[(j * r + i) * r + k] as f64 / sizes[k];
                    b[(k, i)] = a_jik * (sizes[k] / sizes[i]).sqrt();
                }
            }
            bs.push(b);
        }
        for j in 0..r {
            let diff = (&bs[inv_class[j]] - bs[j].transpose()).norm();
            if diff > 1e-8 * n {
                return Err(Error::InconsistentTable(format!(
                    "class algebra adjoint identity violated ({diff:e})"
                )));
            }
        }
        // Hermitian family: H_j = (B_j + B_j^T)/2 (real symmetric) and
        // K_j = (B_j - B_j^T)/(2i) (i * real antisymmetric).
        // Joint eigenvectors found by recursive splitting; each subspace is
        // stored as a complex orthonormal basis (columns).
        let mut spaces: Vec<DMatrix<Complex64>> =
            vec![DMatrix::identity(r, r).map(|x: f64| Complex64::new(x, 0.0))];
        let to_c = |m: &DMatrix<f64>| m.map(|x| Complex64::new(x, 0.0));
        let mut family: Vec<DMatrix<Complex64>> = Vec::new();
        for b in &bs {
            let sym = (b + b.transpose()) * 0.5;
            let asym = (b - b.transpose()) * 0.5;
            family.push(to_c(&sym));
            family.push(to_c(&asym).map(|z| Complex64::new(-z.im, z.re))); // i * asym... see below
        }
        // note: K_j = (B_j - B_j^T) / (2i) = -i * asym; any nonzero multiple
        // splits the same eigenspaces, so the constant factor is irrelevant.
        for h in &family {
            let mut next = Vec::new();
            for basis in spaces.drain(..) {
                if basis.ncols() == 1 {
                    next.push(basis);
                    continue;
                }
                // restriction of h to the subspace: basis^H * h * basis
                let restr = basis.adjoint() * h * &basis;
                let d = restr.nrows();
                // Hermitian eigenproblem via the real 2d x 2d embedding
                // [[A, -B], [B, A]] of A + iB.
                let mut real = DMatrix::zeros(2 * d, 2 * d);
                for i in 0..d {
                    for j in 0..d {
                        let z = restr[(i, j)];
                        real[(i, j)] = z.re;
                        real[(i + d, j + d)] = z.re;
                        real[(i + d, j)] = z.im;
                        real[(i, j + d)] = -z.im;
                    }
                }
                // symmetrize against roundoff
                let real = (&real + real.transpose()) * 0.5;
                let eig = SymmetricEigen::new(real);
                // group eigenvalues (each appears twice via the embedding)
                let mut idx: Vec<usize> = (0..2 * d).collect();
                idx.sort_by(|&a, &b| {
                    eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap()
                });
                let tol = 1e-7 * (1.0 + eig.eigenvalues.amax());
                let mut group_start = 0;
                let mut groups: Vec<Vec<usize>> = Vec::new();
                for t in 1..=idx.len() {
                    if t == idx.len()
                        || eig.eigenvalues[idx[t]] - eig.eigenvalues[idx[group_start]] > tol
                    {
                        groups.push(idx[group_start..t].to_vec());
                        group_start = t;
                    }
                }
                for grp in groups {
                    // complex dimension = half the real multiplicity
                    debug_assert!(grp.len() % 2 == 0);
                    let cdim = grp.len() / 2;
                    // extract complex vectors x + iy from real eigenvectors
                    // (x; y); orthonormalize to pick cdim independent ones.
                    let mut cols: Vec<nalgebra::DVector<Complex64>> = Vec::new();
                    for &gi in &grp {
                        let v = eig.eigenvectors.column(gi);
                        let mut c = nalgebra::DVector::from_element(d, Complex64::default());
                        for i in 0..d {
                            c[i] = Complex64::new(v[i], v[i + d]);
                        }
                        // Gram-Schmidt against accepted columns
                        for a in &cols {
                            let proj: Complex64 =
                                a.iter().zip(c.iter()).map(|(x, y)| x.conj() * y).sum();
                            let cc = c.clone();
                            c = cc - a * proj;
                        }
                        let norm = c.norm();
                        if norm > 1e-6 && cols.len() < cdim {
                            cols.push(c / Complex64::new(norm, 0.0));
                        }
                    }
                    debug_assert_eq!(cols.len(), cdim);
                    let sub = DMatrix::from_columns(&cols);
                    next.push(&basis * sub);
                }
            }
            spaces = next;
            if spaces.iter().all(|s| s.ncols() == 1) {
                break;
            }
        }
        if spaces.len() != r {
            return Err(Error::InconsistentTable(format!(
                "class algebra did not split into {r} joint eigenlines (got {})",
                spaces.len()
            )));
        }
        // From each joint eigenline recover the character: with v an
        // eigenvector of all B_j, the eigenvalue on B_j is
        // omega(j) = |C_j| chi(g_j) / chi(1); then
        // chi(1)^2 = |G| / sum_j |omega(j)|^2 / |C_j|.
        let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(r);
        for space in &spaces {
            let v = space.column(0);
            let mut omega = vec![Complex64::default(); r];
            for j in 0..r {
                let bv = to_c(&bs[j]) * v;
                // eigenvalue = <v, B_j v> (v unit)
                omega[j] = v.iter().zip(bv.iter()).map(|(x, y)| x.conj() * y).sum();
            }
            let denom: f64 = (0..r).map(|j| omega[j].norm_sqr() / sizes[j]).sum();
            let deg = (self.n as f64 / denom).sqrt();
            let row: Vec<Complex64> =
                (0..r).map(|j| omega[j] * deg / sizes[j]).collect();
            rows.push(row);
        }
        // deterministic order: trivial first, then ascending degree, then by
        // lexicographic comparison of rounded values
        rows.sort_by(|a, b| {
            let da = a[0].re;
            let db = b[0].re;
            let ta = a.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-6);
            let tb = b.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-6);
            tb.cmp(&ta)
                .then(da.partial_cmp(&db).unwrap())
                .then_with(|| {
                    for (x, y) in a.iter().zip(b) {
                        let kx = ((x.re * 1e6).round(), (x.im * 1e6).round());
                        let ky = ((y.re * 1e6).round(), (y.im * 1e6).round());
                        let c = kx.partial_cmp(&ky).unwrap();
                        if c != std::cmp::Ordering::Equal {
                            return c;
                        }
                    }
                    std::cmp::Ordering::Equal
                })
        });
        Ok(rows)
    }
}

/// Build a multiplication table from an element list and a product closure
/// (convenience for tests and embeddings).
pub fn table_from<T: Eq + std::hash::Hash + Clone>(
    elements: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> Result<MultTable> {
    let n = elements.len();
    let index: std::collections::HashMap<&T, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = mul(&elements[i], &elements[j]);
            let k = *index
                .get(&p)
                .ok_or_else(|| Error::InconsistentTable("product not in element list".into()))?;
            table[i * n + j] = k;
        }
    }
    MultTable::new(n, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_table() -> MultTable {
        // S_3 as permutations of 3 points
        let perms: Vec<Vec<u8>> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        table_from(&perms, |a, b| b.iter().map(|&i| a[i as usize]).collect())
            .unwrap()
    }

    #[test]
    fn s3_classes() {
        let t = s3_table();
        assert_eq!(t.conjugacy_classes().len(), 3);
        let mut sizes: Vec<u64> = t.conjugacy_classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn s3_character_table_via_burnside() {
        let t = s3_table();
        let rows = t.character_table_values().unwrap();
        let mut degs: Vec<i64> = rows.iter().map(|r| r[0].re.round() as i64).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2]);
        // orthogonality
        let classes = t.conjugacy_classes();
        for a in &rows {
            for b in &rows {
                let ip: Complex64 = classes
                    .iter()
                    .enumerate()
                    .map(|(i, c)| a[i] * b[i].conj() * c.size as f64)
                    .sum::<Complex64>()
                    / 6.0;
                let expect = if std::ptr::eq(a, b) { 1.0 } else { 0.0 };
                assert!((ip - expect).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn quaternion_group_has_complexity() {
        // Q8 via symbolic multiplication:
        // sign bit + unit index (0=1, 1=i, 2=j, 3=k)
        fn mulq(a: u8, b: u8) -> u8 {
            // sign in bit 0 (0 => +, 1 => -), unit in bits 1.. (0=1,1=i,2=j,3=k)
            let (sa, ua) = (a & 1, a >> 1);
            let (sb, ub) = (b & 1, b >> 1);
            let (s, u) = match (ua, ub) {
                (0, x) => (0, x),
                (x, 0) => (0, x),
                (x, y) if x == y => (1, 0),
                (1, 2) => (0, 3),
                (2, 1) => (1, 3),
                (2, 3) => (0, 1),
                (3, 2) => (1, 1),
                (3, 1) => (0, 2),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            };
            (u << 1) | (s ^ sa ^ sb)
        }
        let els: Vec<u8> = (0..8).collect();
        let t = table_from(&els, |&a, &b| mulq(a, b)).unwrap();
        assert_eq!(t.conjugacy_classes().len(), 5);
        let rows = t.character_table_values().unwrap();
        let mut degs: Vec<i64> = rows.iter().map(|r| r[0].re.round() as i64).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn rejects_broken_table() {
        // 2x2 "table" that is not a group (no identity behaves correctly)
        assert!(MultTable::new(2, vec![0, 0, 1, 1]).is_err());
        assert!(MultTable::new(2, vec![0, 1, 1, 0]).is_ok()); // C2
    }
}
