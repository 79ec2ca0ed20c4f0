//! First-quadrant spectral sequences of double complexes over a field.
//!
//! A [`DoubleComplex`] carries anticommuting horizontal and vertical
//! differentials (`dh: (s,t) -> (s-1,t)`, `dv: (s,t) -> (s,t-1)`), with the
//! column index allowed to start at `-1` for augmented inputs. Pages are
//! computed from the column filtration of the total complex by exact linear
//! algebra: the cycle space `Z^r_{s,t} = F_s . d^{-1}(F_{s-r})` and the
//! boundary space `B^r = Z^{r-1}_{s-1,t+1} + d Z^{r-1}_{s+r-1,t-r+2}` give
//! `E^r = Z^r / B^r`, and `d^r` is induced by the total differential on
//! chosen representatives. Basis choices are first-found pivots, so all
//! outputs are deterministic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain::{ChainComplex, ChainMap};
use crate::field::{FMatrix, Field};
use crate::matrix::IntMatrix;
use crate::semisimp::{SemiSimplicialSet, SsetError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecSeqError {
    /// `dh` or `dv` has the wrong shape at `(s, t)`.
    Shape { s: i64, t: i64 },
    /// One of the squares `dh.dh`, `dv.dv`, `dh.dv + dv.dh` is nonzero.
    NotDoubleComplex { s: i64, t: i64 },
    /// Levelwise face chain maps violate `d_i d_j = d_{j-1} d_i` at level `s`.
    SimplicialIdentity { s: i64, i: usize, j: usize },
    /// A levelwise face map is not a chain map (degree recorded).
    NotChainMap { s: i64, degree: i64 },
    NotAugmented,
    Sset(SsetError),
}

impl From<SsetError> for SpecSeqError {
    fn from(e: SsetError) -> Self {
        SpecSeqError::Sset(e)
    }
}

impl core::fmt::Display for SpecSeqError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpecSeqError::Shape { s, t } => write!(f, "differential shape mismatch at ({s},{t})"),
            SpecSeqError::NotDoubleComplex { s, t } => {
                write!(f, "differentials do not square/anticommute to zero at ({s},{t})")
            }
            SpecSeqError::SimplicialIdentity { s, i, j } => {
                write!(f, "face chain maps violate d_{i} d_{j} = d_{} d_{i} at level {s}", j - 1)
            }
            SpecSeqError::NotChainMap { s, degree } => {
                write!(f, "face map at level {s} is not a chain map (degree {degree})")
            }
            SpecSeqError::NotAugmented => write!(f, "augmentation required"),
            SpecSeqError::Sset(e) => write!(f, "{e}"),
        }
    }
}

/// A first-quadrant double complex over a field, with columns starting at
/// `s_min` (either `0` or `-1`).
#[derive(Clone, Debug)]
pub struct DoubleComplex<F: Field> {
    field: F,
    s_min: i64,
    /// `dims[si][t]`, rectangular.
    dims: Vec<Vec<usize>>,
    /// `dh[si][t] : (s,t) -> (s-1,t)`; zero-row matrices at `si == 0`.
    dh: Vec<Vec<FMatrix<F>>>,
    /// `dv[si][t] : (s,t) -> (s,t-1)`; zero-row matrices at `t == 0`.
    dv: Vec<Vec<FMatrix<F>>>,
}

/// One page of a spectral sequence.
#[derive(Clone, Debug)]
pub struct Page<F: Field> {
    pub r: u32,
    pub s_min: i64,
    /// `dims[si][t]`.
    pub dims: Vec<Vec<usize>>,
    /// `d^r` keyed by source `(s, t)`, only for spots where source and
    /// target are both nonzero.
    pub differentials: BTreeMap<(i64, i64), FMatrix<F>>,
}

impl<F: Field> Page<F> {
    pub fn dim(&self, s: i64, t: i64) -> usize {
        let si = s - self.s_min;
        if si < 0 || t < 0 {
            return 0;
        }
        self.dims
            .get(si as usize)
            .and_then(|col| col.get(t as usize))
            .copied()
            .unwrap_or(0)
    }
}

/// Outcome of comparing `E^infinity` totals with the homology of the total
/// complex.
#[derive(Clone, Debug)]
pub struct AbutmentReport {
    /// `(total degree, sum of E^infinity dims, dim H of total complex)`.
    pub entries: Vec<(i64, usize, usize)>,
    pub ok: bool,
}

impl<F: Field> DoubleComplex<F> {
    pub fn new(
        field: F,
        s_min: i64,
        dims: Vec<Vec<usize>>,
        dh: Vec<Vec<FMatrix<F>>>,
        dv: Vec<Vec<FMatrix<F>>>,
    ) -> Result<Self, SpecSeqError> {
        assert!(s_min == 0 || s_min == -1, "s_min must be 0 or -1");
        let dc = DoubleComplex { field, s_min, dims, dh, dv };
        dc.validate()?;
        Ok(dc)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn s_min(&self) -> i64 {
        self.s_min
    }

    pub fn s_max(&self) -> i64 {
        self.s_min + self.dims.len() as i64 - 1
    }

    pub fn t_max(&self) -> i64 {
        self.dims.first().map_or(0, |c| c.len() as i64 - 1)
    }

    pub fn dim(&self, s: i64, t: i64) -> usize {
        let si = s - self.s_min;
        if si < 0 || t < 0 || si as usize >= self.dims.len() {
            return 0;
        }
        self.dims[si as usize].get(t as usize).copied().unwrap_or(0)
    }

    fn dh_at(&self, s: i64, t: i64) -> Option<&FMatrix<F>> {
        let si = (s - self.s_min) as usize;
        self.dh.get(si)?.get(t as usize)
    }

    fn dv_at(&self, s: i64, t: i64) -> Option<&FMatrix<F>> {
        let si = (s - self.s_min) as usize;
        self.dv.get(si)?.get(t as usize)
    }

    fn validate(&self) -> Result<(), SpecSeqError> {
        let t_count = self.dims.first().map_or(0, Vec::len);
        for col in &self.dims {
            if col.len() != t_count {
                return Err(SpecSeqError::Shape { s: 0, t: t_count as i64 });
            }
        }
        for s in self.s_min..=self.s_max() {
            for t in 0..=self.t_max() {
                let dh = self.dh_at(s, t).ok_or(SpecSeqError::Shape { s, t })?;
                if dh.rows() != self.dim(s - 1, t) || dh.cols() != self.dim(s, t) {
                    return Err(SpecSeqError::Shape { s, t });
                }
                let dv = self.dv_at(s, t).ok_or(SpecSeqError::Shape { s, t })?;
                if dv.rows() != self.dim(s, t - 1) || dv.cols() != self.dim(s, t) {
                    return Err(SpecSeqError::Shape { s, t });
                }
            }
        }
        let f = &self.field;
        for s in self.s_min..=self.s_max() {
            for t in 0..=self.t_max() {
                let dh = self.dh_at(s, t).unwrap();
                let dv = self.dv_at(s, t).unwrap();
                if s - 1 >= self.s_min {
                    let hh = self.dh_at(s - 1, t).unwrap().mul(f, dh);
                    if !hh.is_zero(f) {
                        return Err(SpecSeqError::NotDoubleComplex { s, t });
                    }
                }
                if t >= 1 {
                    let vv = self.dv_at(s, t - 1).unwrap().mul(f, dv);
                    if !vv.is_zero(f) {
                        return Err(SpecSeqError::NotDoubleComplex { s, t });
                    }
                }
                // dh dv + dv dh = 0 out of (s,t)
                if t >= 1 && s - 1 >= self.s_min {
                    let a = self.dv_at(s - 1, t).unwrap().mul(f, dh);
                    let b = self.dh_at(s, t - 1).unwrap().mul(f, dv);
                    if !a.add(f, &b).is_zero(f) {
                        return Err(SpecSeqError::NotDoubleComplex { s, t });
                    }
                }
            }
        }
        Ok(())
    }

    fn total_degree_range(&self) -> (i64, i64) {
        (self.s_min, self.s_max() + self.t_max())
    }

    /// Dimension of the total complex in degree `n`, and block offsets per
    /// column `s` (ascending).
    fn total_blocks(&self, n: i64) -> Vec<(i64, usize, usize)> {
        // (s, offset, size)
        let mut out = Vec::new();
        let mut offset = 0;
        for s in self.s_min..=self.s_max() {
            let t = n - s;
            if t < 0 {
                continue;
            }
            let size = self.dim(s, t);
            out.push((s, offset, size));
            offset += size;
        }
        out
    }

    fn total_dim(&self, n: i64) -> usize {
        self.total_blocks(n).iter().map(|&(_, _, sz)| sz).sum()
    }

    /// Total differential `T_n -> T_{n-1}`.
    fn total_differential(&self, n: i64) -> FMatrix<F> {
        let f = &self.field;
        let src = self.total_blocks(n);
        let tgt = self.total_blocks(n - 1);
        let find = |s: i64| tgt.iter().find(|&&(bs, _, _)| bs == s).map(|&(_, o, _)| o);
        let mut m = FMatrix::zeros(f, self.total_dim(n - 1), self.total_dim(n));
        for &(s, src_off, src_size) in &src {
            if src_size == 0 {
                continue;
            }
            let t = n - s;
            // horizontal block to (s-1, t)
            if let (Some(dst_off), Some(dh)) = (find(s - 1), self.dh_at(s, t)) {
                for i in 0..dh.rows() {
                    for j in 0..src_size {
                        m.set(dst_off + i, src_off + j, dh.get(i, j).clone());
                    }
                }
            }
            // vertical block to (s, t-1)
            if t >= 1 {
                if let (Some(dst_off), Some(dv)) = (find(s), self.dv_at(s, t)) {
                    for i in 0..dv.rows() {
                        for j in 0..src_size {
                            m.set(dst_off + i, src_off + j, dv.get(i, j).clone());
                        }
                    }
                }
            }
        }
        m
    }

    /// Basis of `Z^r(n, p) = { x in F_p . T_n : d x in F_{p-r} T_{n-1} }`,
    /// as columns in `T_n` coordinates.
    fn cycle_space(&self, n: i64, p: i64, r: i64) -> FMatrix<F> {
        let f = &self.field;
        let total = self.total_dim(n);
        if p < self.s_min {
            return FMatrix::zeros(f, total, 0);
        }
        let blocks = self.total_blocks(n);
        // inclusion of the coordinates with s <= p
        let included: Vec<usize> = blocks
            .iter()
            .filter(|&&(s, _, _)| s <= p)
            .flat_map(|&(_, off, size)| off..off + size)
            .collect();
        let mut incl = FMatrix::zeros(f, total, included.len());
        for (j, &row) in included.iter().enumerate() {
            incl.set(row, j, f.one());
        }
        let d = self.total_differential(n);
        let d_incl = d.mul(f, &incl);
        // rows of T_{n-1} with s > p - r
        let tgt_blocks = self.total_blocks(n - 1);
        let bad_rows: Vec<usize> = tgt_blocks
            .iter()
            .filter(|&&(s, _, _)| s > p - r)
            .flat_map(|&(_, off, size)| off..off + size)
            .collect();
        let mut proj = FMatrix::zeros(f, bad_rows.len(), self.total_dim(n - 1));
        for (i, &col) in bad_rows.iter().enumerate() {
            proj.set(i, col, f.one());
        }
        let ker = proj.mul(f, &d_incl).kernel_basis(f);
        incl.mul(f, &ker)
    }

    /// Generating set (not reduced) of the boundary subspace `B^r` at
    /// `(s, t)` inside `T_{s+t}`.
    fn boundary_space(&self, s: i64, t: i64, r: i64) -> FMatrix<F> {
        let f = &self.field;
        let n = s + t;
        let below = self.cycle_space(n, s - 1, r - 1);
        let upper = self.cycle_space(n + 1, s + r - 1, r - 1);
        let d_upper = self.total_differential(n + 1).mul(f, &upper);
        below.hstack(f, &d_upper)
    }

    /// The page `E^r` together with `d^r`, for `r >= 1`.
    pub fn page(&self, r: u32) -> Page<F> {
        let f = &self.field;
        let rr = r as i64;
        let s_count = (self.s_max() - self.s_min + 1) as usize;
        let t_count = (self.t_max() + 1) as usize;
        let mut dims = vec![vec![0usize; t_count]; s_count];
        // representatives per (s,t): (reps matrix, boundary basis)
        let mut reps: BTreeMap<(i64, i64), (FMatrix<F>, FMatrix<F>)> = BTreeMap::new();
        for s in self.s_min..=self.s_max() {
            for t in 0..=self.t_max() {
                if self.dim(s, t) == 0 && self.total_dim(s + t) == 0 {
                    continue;
                }
                let z = self.cycle_space(s + t, s, rr);
                let b = self.boundary_space(s, t, rr);
                let b_basis = b.column_space_basis(f);
                // reduce [B | Z]; pivots landing in the Z block give reps
                let stacked = b_basis.hstack(f, &z);
                let mut work = stacked.clone();
                let pivots = work.row_reduce(f);
                let rep_cols: Vec<Vec<F::Elem>> = pivots
                    .iter()
                    .filter(|&&(_, c)| c >= b_basis.cols())
                    .map(|&(_, c)| stacked.column(c))
                    .collect();
                let rep_m = FMatrix::from_columns(f, z.rows(), &rep_cols);
                dims[(s - self.s_min) as usize][t as usize] = rep_m.cols();
                reps.insert((s, t), (rep_m, b_basis));
            }
        }
        let mut differentials = BTreeMap::new();
        for s in self.s_min..=self.s_max() {
            for t in 0..=self.t_max() {
                let (ts, tt) = (s - rr, t + rr - 1);
                let src_dim = dims
                    .get((s - self.s_min) as usize)
                    .map_or(0, |c| c.get(t as usize).copied().unwrap_or(0));
                if ts < self.s_min || tt > self.t_max() {
                    continue;
                }
                let tgt_dim = dims[(ts - self.s_min) as usize][tt as usize];
                if src_dim == 0 || tgt_dim == 0 {
                    continue;
                }
                let (src_reps, _) = &reps[&(s, t)];
                let (tgt_reps, tgt_b) = &reps[&(ts, tt)];
                let image = self.total_differential(s + t).mul(f, src_reps);
                let basis = tgt_b.hstack(f, tgt_reps);
                let sol = basis
                    .solve(f, &image)
                    .expect("d^r image lies in the target cycle space");
                // keep only the coefficients on the representatives
                let mut d = FMatrix::zeros(f, tgt_dim, src_dim);
                for i in 0..tgt_dim {
                    for j in 0..src_dim {
                        d.set(i, j, sol.get(tgt_b.cols() + i, j).clone());
                    }
                }
                differentials.insert((s, t), d);
            }
        }
        Page { r, s_min: self.s_min, dims, differentials }
    }

    /// Pages `E^1 ..= E^{r_max}`.
    pub fn pages(&self, r_max: u32) -> Vec<Page<F>> {
        (1..=r_max).map(|r| self.page(r)).collect()
    }

    /// The page index from which nothing can move any more.
    pub fn stable_page_index(&self) -> u32 {
        let s_extent = (self.s_max() - self.s_min + 1).max(1);
        let t_extent = (self.t_max() + 1).max(1);
        (s_extent.max(t_extent) + 1) as u32
    }

    pub fn e_infinity(&self) -> Page<F> {
        self.page(self.stable_page_index())
    }

    /// Homology dimension of the total complex in degree `n`.
    pub fn total_homology_dim(&self, n: i64) -> usize {
        let f = &self.field;
        let rank_out = self.total_differential(n).rank(f);
        let rank_in = self.total_differential(n + 1).rank(f);
        self.total_dim(n) - rank_out - rank_in
    }

    /// Verify that `E^infinity` totals match the homology of the total
    /// complex in every degree.
    pub fn abutment_check(&self) -> AbutmentReport {
        let einf = self.e_infinity();
        let (lo, hi) = self.total_degree_range();
        let mut entries = Vec::new();
        let mut ok = true;
        for n in lo..=hi {
            let mut total = 0usize;
            for s in self.s_min..=self.s_max() {
                let t = n - s;
                if t >= 0 {
                    total += einf.dim(s, t);
                }
            }
            let h = self.total_homology_dim(n);
            if total != h {
                ok = false;
            }
            entries.push((n, total, h));
        }
        AbutmentReport { entries, ok }
    }
}

/// Build the double complex of a semi-simplicial set with discrete levels:
/// column `s` is concentrated in `t = 0` and the horizontal differential is
/// the alternating sum of the face maps. With `use_augmentation` (requires
/// an augmented set) the column `s = -1` is included and `d^1` out of
/// column 0 is the augmentation.
pub fn from_semisimplicial<F: Field>(
    x: &SemiSimplicialSet,
    field: F,
    use_augmentation: bool,
) -> Result<DoubleComplex<F>, SpecSeqError> {
    if use_augmentation && !x.is_augmented() {
        return Err(SpecSeqError::NotAugmented);
    }
    let chains = if x.is_pointed() {
        x.reduced_realization_chains(crate::chain::Ring::Integers)?
    } else {
        x.realization_chains(crate::chain::Ring::Integers, use_augmentation)?
    };
    let s_min = chains.min_degree(); // -1 when augmented was requested
    let s_count = (chains.max_degree() - s_min + 1) as usize;
    let mut dims = Vec::with_capacity(s_count);
    let mut dh = Vec::with_capacity(s_count);
    let mut dv = Vec::with_capacity(s_count);
    for s in s_min..=chains.max_degree() {
        let d = chains.dim(s);
        dims.push(vec![d]);
        dh.push(vec![FMatrix::from_int_matrix(&field, &chains.boundary(s))]);
        dv.push(vec![FMatrix::zeros(&field, 0, d)]);
    }
    DoubleComplex::new(field, s_min, dims, dh, dv)
}

/// Assemble a double complex from one chain complex per level and face
/// chain maps `faces[s][i] : level s -> level s-1` satisfying the
/// simplicial identities strictly. Column `s` carries level `s` in rows
/// `t`, and the horizontal differential is the alternating face sum with
/// the `(-1)^t` sign twist that makes the squares anticommute.
pub fn from_levelwise<F: Field>(
    field: F,
    levels: &[ChainComplex],
    faces: &[Vec<ChainMap>],
) -> Result<DoubleComplex<F>, SpecSeqError> {
    assert_eq!(levels.len(), faces.len().saturating_add(1), "need faces for levels 1..");
    for c in levels {
        assert_eq!(c.min_degree(), 0, "levelwise complexes must start in degree 0");
    }
    // validate chain maps and identities
    for (s1, fs) in faces.iter().enumerate() {
        let s = s1 + 1;
        assert_eq!(fs.len(), s + 1, "level {s} needs {} face maps", s + 1);
        for m in fs {
            m.validate(&levels[s], &levels[s - 1]).map_err(|e| match e {
                crate::chain::ChainError::NotChainMap { degree } => {
                    SpecSeqError::NotChainMap { s: s as i64, degree }
                }
                _ => SpecSeqError::Shape { s: s as i64, t: 0 },
            })?;
        }
    }
    for s in 2..levels.len() {
        let t_max = levels.iter().map(|c| c.max_degree()).max().unwrap_or(0);
        for j in 1..=s {
            for i in 0..j {
                for deg in 0..=t_max {
                    let a = faces[s - 2][i]
                        .matrix(&levels[s - 1], &levels[s - 2], deg)
                        .mul(&faces[s - 1][j].matrix(&levels[s], &levels[s - 1], deg));
                    let b = faces[s - 2][j - 1]
                        .matrix(&levels[s - 1], &levels[s - 2], deg)
                        .mul(&faces[s - 1][i].matrix(&levels[s], &levels[s - 1], deg));
                    if a != b {
                        return Err(SpecSeqError::SimplicialIdentity { s: s as i64, i, j });
                    }
                }
            }
        }
    }
    let t_count = levels.iter().map(|c| c.max_degree() + 1).max().unwrap_or(0).max(1) as usize;
    let mut dims = Vec::new();
    let mut dh = Vec::new();
    let mut dv = Vec::new();
    for (s, c) in levels.iter().enumerate() {
        let col: Vec<usize> = (0..t_count).map(|t| c.dim(t as i64)).collect();
        let mut col_dh = Vec::new();
        let mut col_dv = Vec::new();
        for t in 0..t_count {
            let here = c.dim(t as i64);
            // alternating face sum with (-1)^t twist
            let below_dim = if s == 0 { 0 } else { levels[s - 1].dim(t as i64) };
            let mut h = IntMatrix::zeros(below_dim, here);
            if s >= 1 {
                for (i, fm) in faces[s - 1].iter().enumerate() {
                    let m = fm.matrix(c, &levels[s - 1], t as i64);
                    let sign = if (i + t) % 2 == 0 { 1 } else { -1 };
                    for r in 0..below_dim {
                        for cc in 0..here {
                            h.set(r, cc, h.get(r, cc) + sign * m.get(r, cc));
                        }
                    }
                }
            }
            col_dh.push(FMatrix::from_int_matrix(&field, &h));
            let v = if t == 0 {
                IntMatrix::zeros(0, here)
            } else {
                c.boundary(t as i64)
            };
            col_dv.push(FMatrix::from_int_matrix(&field, &v));
        }
        dims.push(col);
        dh.push(col_dh);
        dv.push(col_dv);
    }
    DoubleComplex::new(field, 0, dims, dh, dv)
}

/// Abutment report of an augmented complex, carrying both degree labels:
/// the grid total degree `n` (which for a point augmentation is the degree
/// of reduced homology of the realization) and the mapping-cone degree
/// `n + 1`.
#[derive(Clone, Debug)]
pub struct AugmentedReport<F: Field> {
    pub pages: Vec<Page<F>>,
    /// `(grid degree, cone degree, E^infinity total)`.
    pub abutment: Vec<(i64, i64, usize)>,
    pub check: AbutmentReport,
}

/// Pages of a double complex with `s_min = -1` (the augmented spectral
/// sequence), with the abutment reported in both degree conventions.
pub fn augmented_pages<F: Field>(
    dc: &DoubleComplex<F>,
    r_max: u32,
) -> Result<AugmentedReport<F>, SpecSeqError> {
    if dc.s_min() != -1 {
        return Err(SpecSeqError::NotAugmented);
    }
    let pages = dc.pages(r_max.max(dc.stable_page_index()));
    let einf = pages.last().expect("at least one page");
    let (lo, hi) = dc.total_degree_range();
    let mut abutment = Vec::new();
    for n in lo..=hi {
        let mut total = 0;
        for s in dc.s_min()..=dc.s_max() {
            if n - s >= 0 {
                total += einf.dim(s, n - s);
            }
        }
        abutment.push((n, n + 1, total));
    }
    Ok(AugmentedReport { pages, abutment, check: dc.abutment_check() })
}

/// Deterministic xorshift generator for randomized instances.
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed.wrapping_add(0x9e3779b97f4a7c15) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n.max(1)
    }

    /// Small signed integer in `-3..=3`.
    pub fn small_int(&mut self) -> i128 {
        (self.below(7) as i128) - 3
    }
}

fn random_chain_complex(rng: &mut SplitMix, length: usize, max_dim: usize) -> Vec<IntMatrix> {
    // returns boundaries d_t : C_t -> C_{t-1} for t = 1..length-1, with a
    // dims vector implied by the matrix shapes; built by sampling each
    // boundary from the integer kernel of the previous one is hard over Z,
    // so build over the rationals' worth of structure with integer entries:
    // d_1 arbitrary, d_t = K * R where the columns of K span ker(d_{t-1})
    // over Q scaled to integer entries. For test-sized dims this is exact.
    let dims: Vec<usize> = (0..length).map(|_| 1 + rng.below(max_dim as u64) as usize).collect();
    let mut boundaries: Vec<IntMatrix> = vec![IntMatrix::zeros(0, 0)];
    let mut prev_kernel: Option<Vec<Vec<i128>>> = None;
    for t in 1..length {
        let (rows, cols) = (dims[t - 1], dims[t]);
        let m = match &prev_kernel {
            None => {
                let mut m = IntMatrix::zeros(rows, cols);
                for i in 0..rows {
                    for j in 0..cols {
                        m.set(i, j, rng.small_int());
                    }
                }
                m
            }
            Some(kernel) => {
                // columns are random small combinations of kernel vectors
                let mut m = IntMatrix::zeros(rows, cols);
                for j in 0..cols {
                    for kv in kernel {
                        let c = rng.small_int();
                        for i in 0..rows {
                            m.set(i, j, m.get(i, j) + c * kv[i]);
                        }
                    }
                }
                m
            }
        };
        // integer kernel of m via rational kernel cleared of denominators
        let f = crate::field::Rationals;
        let fm = FMatrix::from_int_matrix(&f, &m);
        let ker = fm.kernel_basis(&f);
        let mut kernel_vecs = Vec::new();
        for j in 0..ker.cols() {
            let col = ker.column(j);
            let lcm = col.iter().fold(1i128, |acc, q| {
                let d = q.denom();
                acc / gcd_i128(acc, d) * d
            });
            kernel_vecs.push(
                col.iter().map(|q| q.numer() * (lcm / q.denom())).collect::<Vec<i128>>(),
            );
        }
        prev_kernel = Some(kernel_vecs);
        boundaries.push(m);
    }
    boundaries
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// A randomized valid double complex: the tensor product of two random
/// integer chain complexes, conjugated by random invertible changes of
/// basis at every spot so the result carries no special structure.
pub fn random_double_complex<F: Field>(
    field: F,
    s_count: usize,
    t_count: usize,
    max_dim: usize,
    seed: u64,
) -> DoubleComplex<F> {
    let mut rng = SplitMix::new(seed);
    let a = random_chain_complex(&mut rng, s_count, max_dim);
    let b = random_chain_complex(&mut rng, t_count, max_dim);
    let a_dims: Vec<usize> = dims_of(&a, s_count);
    let b_dims: Vec<usize> = dims_of(&b, t_count);
    // random invertible matrices per spot: unit upper triangular times unit
    // lower triangular, so inverses are exact and easy
    let mut basis: Vec<Vec<(FMatrix<F>, FMatrix<F>)>> = Vec::new();
    for s in 0..s_count {
        let mut col = Vec::new();
        for t in 0..t_count {
            let n = a_dims[s] * b_dims[t];
            col.push(random_unimodular(&field, n, &mut rng));
            let _ = (s, t);
        }
        basis.push(col);
    }
    let mut dims = Vec::new();
    let mut dh = Vec::new();
    let mut dv = Vec::new();
    for s in 0..s_count {
        let col: Vec<usize> = (0..t_count).map(|t| a_dims[s] * b_dims[t]).collect();
        let mut col_dh = Vec::new();
        let mut col_dv = Vec::new();
        for t in 0..t_count {
            // dh = dA (x) id, dv = (-1)^s id (x) dB, then conjugate
            let dh_int = if s == 0 {
                IntMatrix::zeros(0, col[t])
            } else {
                kron(&a[s], &IntMatrix::identity(b_dims[t]))
            };
            let dv_int = if t == 0 {
                IntMatrix::zeros(0, col[t])
            } else {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                let mut m = kron(&IntMatrix::identity(a_dims[s]), &b[t]);
                if sign < 0 {
                    m = m.neg();
                }
                m
            };
            let conj = |m: &IntMatrix, rows_basis: Option<&(FMatrix<F>, FMatrix<F>)>| {
                let fm = FMatrix::from_int_matrix(&field, m);
                let fm = fm.mul(&field, &basis[s][t].1); // right-multiply by inverse
                match rows_basis {
                    Some((tm, _)) => tm.mul(&field, &fm),
                    None => fm,
                }
            };
            col_dh.push(conj(&dh_int, if s > 0 { Some(&basis[s - 1][t]) } else { None }));
            col_dv.push(conj(&dv_int, if t > 0 { Some(&basis[s][t - 1]) } else { None }));
        }
        dims.push(col);
        dh.push(col_dh);
        dv.push(col_dv);
    }
    DoubleComplex::new(field, 0, dims, dh, dv).expect("tensor construction is valid")
}

fn dims_of(boundaries: &[IntMatrix], length: usize) -> Vec<usize> {
    let mut dims = vec![0usize; length];
    for t in 1..length {
        dims[t - 1] = boundaries[t].rows();
        dims[t] = boundaries[t].cols();
    }
    if length == 1 {
        dims[0] = 1;
    }
    dims
}

fn kron(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i1 in 0..a.rows() {
        for j1 in 0..a.cols() {
            let v = a.get(i1, j1);
            if v == 0 {
                continue;
            }
            for i2 in 0..b.rows() {
                for j2 in 0..b.cols() {
                    out.set(i1 * b.rows() + i2, j1 * b.cols() + j2, v * b.get(i2, j2));
                }
            }
        }
    }
    out
}

/// `(M, M^{-1})` for a random unit-triangular product.
fn random_unimodular<F: Field>(field: &F, n: usize, rng: &mut SplitMix) -> (FMatrix<F>, FMatrix<F>) {
    let mut u = IntMatrix::identity(n);
    let mut l = IntMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            u.set(i, j, rng.small_int());
            l.set(j, i, rng.small_int());
        }
    }
    let m = l.mul(&u);
    let fm = FMatrix::from_int_matrix(field, &m);
    let inv = fm
        .solve(field, &FMatrix::identity(field, n))
        .expect("unit triangular product is invertible");
    (fm, inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::injective_words;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn discrete_injective_words_first_page() {
        let x = injective_words(3);
        let dc = from_semisimplicial(x.sset(), PrimeField::new(2).unwrap(), false).unwrap();
        let p1 = dc.page(1);
        assert_eq!(p1.dim(0, 0), 3);
        assert_eq!(p1.dim(1, 0), 6);
        assert_eq!(p1.dim(2, 0), 6);
        assert_eq!(p1.dim(0, 1), 0);
        // E^2 = E^infinity; totals by degree are (1, 0, 2)
        let e2 = dc.page(2);
        assert_eq!(e2.dim(0, 0), 1);
        assert_eq!(e2.dim(1, 0), 0);
        assert_eq!(e2.dim(2, 0), 2);
        assert!(dc.abutment_check().ok);
    }

    #[test]
    fn augmented_injective_words_vanishing() {
        let x = injective_words(3);
        let dc = from_semisimplicial(x.sset(), Rationals, true).unwrap();
        assert_eq!(dc.s_min(), -1);
        let rep = augmented_pages(&dc, 2).unwrap();
        assert!(rep.check.ok);
        // abutment vanishes in grid degrees <= 1, dim 2 in degree 2
        for &(n, cone, total) in &rep.abutment {
            assert_eq!(cone, n + 1);
            if n <= 1 {
                assert_eq!(total, 0, "degree {n}");
            }
            if n == 2 {
                assert_eq!(total, 2);
            }
        }
    }

    #[test]
    fn augmented_one_letter_contractible() {
        let x = injective_words(1);
        let dc = from_semisimplicial(x.sset(), Rationals, true).unwrap();
        let rep = augmented_pages(&dc, 2).unwrap();
        assert!(rep.abutment.iter().all(|&(_, _, total)| total == 0));
    }

    #[test]
    fn cone_of_identity_two_columns_vanishes() {
        // two-column complex: identity map between two copies of a point
        let f = Rationals;
        let dims = vec![vec![1], vec![1]];
        let dh = vec![
            vec![FMatrix::zeros(&f, 0, 1)],
            vec![FMatrix::identity(&f, 1)],
        ];
        let dv = vec![vec![FMatrix::zeros(&f, 0, 1)], vec![FMatrix::zeros(&f, 0, 1)]];
        let dc = DoubleComplex::new(f, 0, dims, dh, dv).unwrap();
        let e2 = dc.page(2);
        assert_eq!(e2.dim(0, 0) + e2.dim(1, 0), 0);
        assert!(dc.abutment_check().ok);
    }

    #[test]
    fn random_double_complexes_abut() {
        for seed in 0..5 {
            let dc = random_double_complex(Rationals, 3, 3, 3, seed);
            assert!(dc.abutment_check().ok, "seed {seed}");
            let dc = random_double_complex(PrimeField::new(5).unwrap(), 3, 3, 3, seed);
            assert!(dc.abutment_check().ok, "seed {seed} over F_5");
        }
    }

    #[test]
    fn page_dims_are_monotone_and_match_page_homology() {
        let dc = random_double_complex(PrimeField::new(3).unwrap(), 3, 3, 3, 42);
        let pages = dc.pages(dc.stable_page_index());
        for w in pages.windows(2) {
            let (p, q) = (&w[0], &w[1]);
            for s in dc.s_min()..=dc.s_max() {
                for t in 0..=dc.t_max() {
                    assert!(q.dim(s, t) <= p.dim(s, t), "dims grew at ({s},{t})");
                    // E^{r+1} = ker/im of (E^r, d^r)
                    let f = dc.field();
                    let out_rank =
                        p.differentials.get(&(s, t)).map_or(0, |m| m.rank(f));
                    let in_rank = p
                        .differentials
                        .get(&(s + p.r as i64, t - (p.r as i64 - 1)))
                        .map_or(0, |m| m.rank(f));
                    assert_eq!(
                        q.dim(s, t),
                        p.dim(s, t) - out_rank - in_rank,
                        "page {} -> {} at ({s},{t})",
                        p.r,
                        q.r
                    );
                }
            }
        }
    }

    #[test]
    fn dr_squares_to_zero() {
        let dc = random_double_complex(Rationals, 4, 3, 3, 7);
        for page in dc.pages(4) {
            for (&(s, t), d) in &page.differentials {
                let next = page.differentials.get(&(s - page.r as i64, t + page.r as i64 - 1));
                if let Some(next) = next {
                    assert!(next.mul(dc.field(), d).is_zero(dc.field()));
                }
            }
        }
    }
}
