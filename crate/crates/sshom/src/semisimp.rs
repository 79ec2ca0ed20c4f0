//! Finite semi-simplicial sets: levelwise simplex lists with face maps,
//! optionally augmented (an extra level `-1`) and optionally pointed.
//!
//! Simplices are identified by index within their level; labels are opaque
//! strings used only for IO and determinism. Pointed sets keep their
//! basepoint at index 0 of every level (and of the augmentation level, when
//! both structures are present).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain::{ChainComplex, ChainError, ChainMap, HomologyGroup, Ring};
use crate::matrix::IntMatrix;

/// A violation found by [`SemiSimplicialSet::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Face array of `simplex` at `level` has wrong length or an index out
    /// of range.
    FaceIndex { level: i64, simplex: usize },
    /// `d_i d_j != d_{j-1} d_i` on `simplex` at `level` (for `i < j`).
    SimplicialIdentity { level: i64, simplex: usize, i: usize, j: usize },
    /// `eps d_0 != eps d_1` on 1-simplex `simplex`.
    Augmentation { simplex: usize },
    /// A face of the basepoint at `level` is not the lower basepoint.
    BasepointFace { level: i64, i: usize },
    /// A level is pointed but empty.
    MissingBasepoint { level: i64 },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::FaceIndex { level, simplex } => {
                write!(f, "bad face array on simplex {simplex} at level {level}")
            }
            Violation::SimplicialIdentity { level, simplex, i, j } => write!(
                f,
                "d_{i} d_{j} != d_{} d_{i} on simplex {simplex} at level {level}",
                j - 1
            ),
            Violation::Augmentation { simplex } => {
                write!(f, "eps d_0 != eps d_1 on 1-simplex {simplex}")
            }
            Violation::BasepointFace { level, i } => {
                write!(f, "face d_{i} of the basepoint at level {level} is not the basepoint")
            }
            Violation::MissingBasepoint { level } => {
                write!(f, "pointed set has empty level {level}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SsetError {
    Invalid(Vec<Violation>),
    NotAugmented,
    NotPointed,
    Pointed,
    LevelShape { level: i64 },
    /// A map is not levelwise injective (required by the set-level cone).
    NotInjective { level: i64 },
    MapMismatch { level: i64, simplex: usize },
}

impl core::fmt::Display for SsetError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SsetError::Invalid(v) => {
                write!(f, "invalid semi-simplicial set ({} violation(s)", v.len())?;
                if let Some(first) = v.first() {
                    write!(f, ", first: {first}")?;
                }
                write!(f, ")")
            }
            SsetError::NotAugmented => write!(f, "operation requires an augmented set"),
            SsetError::NotPointed => write!(f, "operation requires a pointed set"),
            SsetError::Pointed => write!(f, "operation requires an unpointed set"),
            SsetError::LevelShape { level } => write!(f, "malformed level {level}"),
            SsetError::NotInjective { level } => {
                write!(f, "map is not injective at level {level}")
            }
            SsetError::MapMismatch { level, simplex } => {
                write!(f, "map does not commute with faces on simplex {simplex} at level {level}")
            }
        }
    }
}

/// A finite semi-simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiSimplicialSet {
    /// Labels of the augmentation level `-1`, if augmented.
    aug_labels: Option<Vec<String>>,
    /// Labels of levels `0..`.
    levels: Vec<Vec<String>>,
    /// `faces[d][s]` lists the faces `d_0..d_d` of simplex `s` at level `d`
    /// as indices into level `d-1`. For `d = 0` the single entry is the
    /// augmentation index (present exactly when augmented).
    faces: Vec<Vec<Vec<usize>>>,
    pointed: bool,
}

impl SemiSimplicialSet {
    pub fn new(
        aug_labels: Option<Vec<String>>,
        levels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        pointed: bool,
    ) -> Result<Self, SsetError> {
        if levels.len() != faces.len() {
            return Err(SsetError::LevelShape { level: levels.len() as i64 });
        }
        for (d, (lv, fc)) in levels.iter().zip(faces.iter()).enumerate() {
            if lv.len() != fc.len() {
                return Err(SsetError::LevelShape { level: d as i64 });
            }
        }
        Ok(SemiSimplicialSet { aug_labels, levels, faces, pointed })
    }

    /// The empty set (no levels, unaugmented, unpointed).
    pub fn empty() -> Self {
        SemiSimplicialSet { aug_labels: None, levels: Vec::new(), faces: Vec::new(), pointed: false }
    }

    pub fn is_augmented(&self) -> bool {
        self.aug_labels.is_some()
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Top dimension, or `-1` if there are no levels (`-2` would never
    /// occur: an augmented set with no levels still has top `-1`... the
    /// convention here is: number of stored levels minus one).
    pub fn top_level(&self) -> i64 {
        self.levels.len() as i64 - 1
    }

    pub fn level_size(&self, d: i64) -> usize {
        if d == -1 {
            self.aug_labels.as_ref().map_or(0, Vec::len)
        } else if d < -1 || d > self.top_level() {
            0
        } else {
            self.levels[d as usize].len()
        }
    }

    pub fn labels(&self, d: i64) -> &[String] {
        if d == -1 {
            self.aug_labels.as_deref().unwrap_or(&[])
        } else {
            &self.levels[d as usize]
        }
    }

    pub fn aug_labels(&self) -> Option<&[String]> {
        self.aug_labels.as_deref()
    }

    pub fn face_arrays(&self, d: i64) -> &[Vec<usize>] {
        &self.faces[d as usize]
    }

    /// Face `d_i` of `simplex` at `level >= 1` (or the augmentation index at
    /// level 0 of an augmented set).
    pub fn face(&self, level: i64, simplex: usize, i: usize) -> usize {
        self.faces[level as usize][simplex][i]
    }

    /// Run every structural check; an empty report means the set is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        // face array arity and ranges
        for d in 0..self.levels.len() {
            let expected = if d == 0 {
                usize::from(self.is_augmented())
            } else {
                d + 1
            };
            let below = if d == 0 {
                self.level_size(-1)
            } else {
                self.levels[d - 1].len()
            };
            for (s, fc) in self.faces[d].iter().enumerate() {
                if fc.len() != expected || fc.iter().any(|&x| x >= below) {
                    out.push(Violation::FaceIndex { level: d as i64, simplex: s });
                }
            }
        }
        if !out.is_empty() {
            // index errors make the identity checks meaningless
            return out;
        }
        // simplicial identities d_i d_j = d_{j-1} d_i for i < j, level >= 2
        for d in 2..self.levels.len() {
            for s in 0..self.levels[d].len() {
                for j in 1..=d {
                    for i in 0..j {
                        let a = self.face(d as i64 - 1, self.face(d as i64, s, j), i);
                        let b = self.face(d as i64 - 1, self.face(d as i64, s, i), j - 1);
                        if a != b {
                            out.push(Violation::SimplicialIdentity {
                                level: d as i64,
                                simplex: s,
                                i,
                                j,
                            });
                        }
                    }
                }
            }
        }
        // augmentation: eps d_0 = eps d_1 on 1-simplices
        if self.is_augmented() && self.levels.len() >= 2 {
            for s in 0..self.levels[1].len() {
                let e0 = self.face(0, self.face(1, s, 0), 0);
                let e1 = self.face(0, self.face(1, s, 1), 0);
                if e0 != e1 {
                    out.push(Violation::Augmentation { simplex: s });
                }
            }
        }
        // pointed: basepoint is index 0 everywhere and faces of the
        // basepoint are basepoints
        if self.pointed {
            for (d, lv) in self.levels.iter().enumerate() {
                if lv.is_empty() {
                    out.push(Violation::MissingBasepoint { level: d as i64 });
                    continue;
                }
                let nfaces = if d == 0 { usize::from(self.is_augmented()) } else { d + 1 };
                for i in 0..nfaces {
                    if self.face(d as i64, 0, i) != 0 {
                        out.push(Violation::BasepointFace { level: d as i64, i });
                    }
                }
            }
            if self.is_augmented() && self.level_size(-1) == 0 && !self.levels.is_empty() {
                out.push(Violation::MissingBasepoint { level: -1 });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn ensure_valid(&self) -> Result<(), SsetError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(SsetError::Invalid(v))
        }
    }

    /// Alternating-sum boundary matrix from level `d` to level `d-1`.
    fn boundary_matrix(&self, d: usize) -> IntMatrix {
        let rows = if d == 0 { self.level_size(-1) } else { self.levels[d - 1].len() };
        let cols = self.levels[d].len();
        let mut m = IntMatrix::zeros(rows, cols);
        for (s, fc) in self.faces[d].iter().enumerate() {
            for (i, &tgt) in fc.iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(tgt, s, m.get(tgt, s) + sign);
            }
        }
        m
    }

    /// The cellular chain complex of the realization.
    ///
    /// With `reduced = true` (requires an augmentation) the complex gains
    /// the level `-1` cells in degree `-1` and the augmentation
    /// differential, so its homology is the reduced homology of the
    /// realization. Pointed sets are rejected; use
    /// [`SemiSimplicialSet::reduced_realization_chains`] for those.
    pub fn realization_chains(&self, ring: Ring, reduced: bool) -> Result<ChainComplex, SsetError> {
        if self.pointed {
            return Err(SsetError::Pointed);
        }
        self.ensure_valid()?;
        if reduced && !self.is_augmented() {
            return Err(SsetError::NotAugmented);
        }
        let mut dims = Vec::new();
        let mut boundaries = Vec::new();
        let min_degree = if reduced { -1 } else { 0 };
        if reduced {
            dims.push(self.level_size(-1));
            boundaries.push(IntMatrix::zeros(0, 0));
        }
        for d in 0..self.levels.len() {
            dims.push(self.levels[d].len());
            if d == 0 && !reduced {
                boundaries.push(IntMatrix::zeros(0, 0));
            } else {
                boundaries.push(self.boundary_matrix(d));
            }
        }
        ChainComplex::new(ring, min_degree, dims, boundaries)
            .map_err(|_| SsetError::LevelShape { level: 0 })
    }

    /// Chain complex on non-basepoint simplices of a pointed set; faces
    /// landing on a basepoint contribute zero to the differential.
    pub fn reduced_realization_chains(&self, ring: Ring) -> Result<ChainComplex, SsetError> {
        if !self.pointed {
            return Err(SsetError::NotPointed);
        }
        self.ensure_valid()?;
        let mut dims = Vec::new();
        let mut boundaries = Vec::new();
        for d in 0..self.levels.len() {
            let cols = self.levels[d].len().saturating_sub(1);
            dims.push(cols);
            if d == 0 {
                boundaries.push(IntMatrix::zeros(0, 0));
                continue;
            }
            let rows = self.levels[d - 1].len().saturating_sub(1);
            let mut m = IntMatrix::zeros(rows, cols);
            for s in 1..self.levels[d].len() {
                for (i, &tgt) in self.faces[d][s].iter().enumerate() {
                    if tgt == 0 {
                        continue; // basepoint face
                    }
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.set(tgt - 1, s - 1, m.get(tgt - 1, s - 1) + sign);
                }
            }
            boundaries.push(m);
        }
        ChainComplex::new(ring, 0, dims, boundaries).map_err(|_| SsetError::LevelShape { level: 0 })
    }

    /// Largest `c` such that reduced homology vanishes in all degrees
    /// `<= c`, or the contractible sentinel when it vanishes through the
    /// whole computed range. Requires an augmentation.
    pub fn homological_connectivity(&self, ring: Ring) -> Result<Connectivity, SsetError> {
        if !self.is_augmented() {
            return Err(SsetError::NotAugmented);
        }
        let chains = self.realization_chains(ring, true)?;
        let groups = chains.homology_all().map_err(|_| SsetError::LevelShape { level: 0 })?;
        for g in &groups {
            if !g.is_zero() {
                return Ok(Connectivity::Bounded(g.degree - 1));
            }
        }
        Ok(Connectivity::ContractibleRange)
    }
}

/// Homological connectivity: either a finite bound (largest degree through
/// which reduced homology vanishes) or vanishing through the entire
/// computed range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Bounded(i64),
    ContractibleRange,
}

impl Connectivity {
    /// `true` if this connectivity is at least `c`.
    pub fn at_least(&self, c: i64) -> bool {
        match self {
            Connectivity::ContractibleRange => true,
            Connectivity::Bounded(b) => *b >= c,
        }
    }

    pub fn min(self, other: Connectivity) -> Connectivity {
        match (self, other) {
            (Connectivity::ContractibleRange, o) => o,
            (s, Connectivity::ContractibleRange) => s,
            (Connectivity::Bounded(a), Connectivity::Bounded(b)) => {
                Connectivity::Bounded(a.min(b))
            }
        }
    }
}

impl core::fmt::Display for Connectivity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Connectivity::Bounded(b) => write!(f, "{b}"),
            Connectivity::ContractibleRange => write!(f, "contractible-range"),
        }
    }
}

/// A map of semi-simplicial sets, stored as per-level index maps. The
/// source and target are passed explicitly to the operations that need
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiSimplicialMap {
    /// `levels[d][s]` is the image index at level `d`.
    pub levels: Vec<Vec<usize>>,
    /// Index map on the augmentation level, when both sets are augmented.
    pub aug: Option<Vec<usize>>,
}

impl SemiSimplicialMap {
    /// Check that the index maps are in range and commute with all face
    /// maps (and the augmentation, when present on both sides).
    pub fn validate(
        &self,
        source: &SemiSimplicialSet,
        target: &SemiSimplicialSet,
    ) -> Result<(), SsetError> {
        if self.levels.len() != source.levels.len() {
            return Err(SsetError::LevelShape { level: self.levels.len() as i64 });
        }
        for d in 0..self.levels.len() {
            if self.levels[d].len() != source.levels[d].len() {
                return Err(SsetError::LevelShape { level: d as i64 });
            }
            if self.levels[d].iter().any(|&x| x >= target.level_size(d as i64)) {
                return Err(SsetError::LevelShape { level: d as i64 });
            }
        }
        if source.is_augmented() && target.is_augmented() {
            let Some(aug) = self.aug.as_ref() else {
                return Err(SsetError::LevelShape { level: -1 });
            };
            if aug.len() != source.level_size(-1)
                || aug.iter().any(|&x| x >= target.level_size(-1))
            {
                return Err(SsetError::LevelShape { level: -1 });
            }
            for s in 0..source.level_size(0) {
                let via_target = target.face(0, self.levels[0][s], 0);
                let via_source = aug[source.face(0, s, 0)];
                if via_target != via_source {
                    return Err(SsetError::MapMismatch { level: 0, simplex: s });
                }
            }
        }
        for d in 1..self.levels.len() {
            for s in 0..source.levels[d].len() {
                for i in 0..=d {
                    let via_target = target.face(d as i64, self.levels[d][s], i);
                    let via_source = self.levels[d - 1][source.face(d as i64, s, i)];
                    if via_target != via_source {
                        return Err(SsetError::MapMismatch { level: d as i64, simplex: s });
                    }
                }
            }
        }
        Ok(())
    }

    /// The induced map of realization chain complexes (unreduced).
    pub fn chain_map(&self, source: &SemiSimplicialSet, target: &SemiSimplicialSet) -> ChainMap {
        let mut maps = Vec::new();
        for d in 0..self.levels.len() {
            let mut m = IntMatrix::zeros(target.level_size(d as i64), source.level_size(d as i64));
            for (s, &img) in self.levels[d].iter().enumerate() {
                m.set(img, s, 1);
            }
            maps.push(m);
        }
        ChainMap { min_degree: 0, maps }
    }
}

/// The levelwise cone on a levelwise-injective map: level `d` of the result
/// is a basepoint (index 0) followed by the non-image simplices of the
/// target level; faces landing in the image are redirected to the
/// basepoint.
///
/// Reduced homology of the result is the relative homology of the pair.
pub fn levelwise_cone(
    map: &SemiSimplicialMap,
    source: &SemiSimplicialSet,
    target: &SemiSimplicialSet,
) -> Result<SemiSimplicialSet, SsetError> {
    source.ensure_valid()?;
    target.ensure_valid()?;
    map.validate(source, target)?;
    for d in 0..map.levels.len() {
        let mut seen = vec![false; target.level_size(d as i64)];
        for &x in &map.levels[d] {
            if seen[x] {
                return Err(SsetError::NotInjective { level: d as i64 });
            }
            seen[x] = true;
        }
    }
    let top = target.top_level();
    // translation tables: target index -> cone index (0 = basepoint)
    let mut translate: Vec<Vec<usize>> = Vec::new();
    let mut levels: Vec<Vec<String>> = Vec::new();
    for d in 0..=top {
        let in_image = {
            let mut v = vec![false; target.level_size(d)];
            if (d as usize) < map.levels.len() {
                for &x in &map.levels[d as usize] {
                    v[x] = true;
                }
            }
            v
        };
        let mut tr = vec![0usize; target.level_size(d)];
        let mut labels = vec![String::from("*")];
        for s in 0..target.level_size(d) {
            if !in_image[s] {
                tr[s] = labels.len();
                labels.push(target.labels(d)[s].clone());
            }
        }
        translate.push(tr);
        levels.push(labels);
    }
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for d in 0..=top {
        let mut level_faces: Vec<Vec<usize>> = Vec::new();
        // the basepoint: all faces are the basepoint below
        let nfaces = if d == 0 { 0 } else { d as usize + 1 };
        level_faces.push(vec![0; nfaces]);
        for s in 0..target.level_size(d) {
            if translate[d as usize][s] == 0 {
                continue;
            }
            if d == 0 {
                level_faces.push(Vec::new());
            } else {
                let fc = (0..=d as usize)
                    .map(|i| translate[d as usize - 1][target.face(d, s, i)])
                    .collect();
                level_faces.push(fc);
            }
        }
        faces.push(level_faces);
    }
    SemiSimplicialSet::new(None, levels, faces, true)
}

/// Homology groups rendered in ascending degree order, used by callers that
/// only care about the list shape.
pub fn nonzero_groups(groups: &[HomologyGroup]) -> Vec<&HomologyGroup> {
    groups.iter().filter(|g| !g.is_zero()).collect()
}

/// Convenience: reduced homology of a pointed set (over `ring`).
pub fn reduced_homology(
    x: &SemiSimplicialSet,
    ring: Ring,
) -> Result<Vec<HomologyGroup>, SsetError> {
    let chains = if x.is_pointed() {
        x.reduced_realization_chains(ring)?
    } else {
        x.realization_chains(ring, true)?
    };
    chains.homology_all().map_err(|e| match e {
        ChainError::BoundarySquare { degree } => SsetError::Invalid(vec![Violation::FaceIndex {
            level: degree,
            simplex: 0,
        }]),
        _ => SsetError::LevelShape { level: 0 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two points and two edges joining them: a circle.
    fn circle_sset() -> SemiSimplicialSet {
        SemiSimplicialSet::new(
            None,
            vec![
                vec![String::from("a"), String::from("b")],
                vec![String::from("e"), String::from("f")],
            ],
            vec![vec![vec![], vec![]], vec![vec![0, 1], vec![0, 1]]],
            false,
        )
        .unwrap()
    }

    #[test]
    fn empty_set_is_valid() {
        assert!(SemiSimplicialSet::empty().is_valid());
    }

    #[test]
    fn circle_is_valid_with_expected_homology() {
        let x = circle_sset();
        assert!(x.is_valid());
        let h = x.realization_chains(Ring::Integers, false).unwrap().homology_all().unwrap();
        assert_eq!(h[0].free_rank, 1);
        assert_eq!(h[1].free_rank, 1);
    }

    #[test]
    fn two_points_rank_two() {
        let x = SemiSimplicialSet::new(
            None,
            vec![vec![String::from("a"), String::from("b")]],
            vec![vec![vec![], vec![]]],
            false,
        )
        .unwrap();
        let h = x.realization_chains(Ring::Integers, false).unwrap().homology_all().unwrap();
        assert_eq!(h[0].free_rank, 2);
    }

    #[test]
    fn broken_identity_is_reported_with_indices() {
        // one 2-simplex whose faces fail d_0 d_1 = d_0 d_0
        let x = SemiSimplicialSet::new(
            None,
            vec![
                vec![String::from("v0"), String::from("v1"), String::from("v2")],
                vec![String::from("e01"), String::from("e02"), String::from("e12")],
                vec![String::from("t")],
            ],
            vec![
                vec![vec![], vec![], vec![]],
                vec![vec![1, 0], vec![2, 0], vec![2, 1]],
                // correct faces would be [e12, e02, e01] = [2, 1, 0]
                vec![vec![1, 2, 0]],
            ],
            false,
        )
        .unwrap();
        let report = x.validate();
        assert!(!report.is_empty());
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::SimplicialIdentity { level: 2, simplex: 0, .. })));
    }

    #[test]
    fn augmentation_identity_checked() {
        // two aug points, edge whose endpoints map to different components
        let x = SemiSimplicialSet::new(
            Some(vec![String::from("c0"), String::from("c1")]),
            vec![
                vec![String::from("a"), String::from("b")],
                vec![String::from("e")],
            ],
            vec![vec![vec![0], vec![1]], vec![vec![0, 1]]],
            false,
        )
        .unwrap();
        let report = x.validate();
        assert_eq!(report, vec![Violation::Augmentation { simplex: 0 }]);
    }

    #[test]
    fn pointed_only_basepoints_has_zero_reduced_homology() {
        let x = SemiSimplicialSet::new(
            None,
            vec![vec![String::from("*")], vec![String::from("*")]],
            vec![vec![vec![]], vec![vec![0, 0]]],
            true,
        )
        .unwrap();
        assert!(x.is_valid());
        let h = reduced_homology(&x, Ring::Integers).unwrap();
        assert!(h.iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn cone_of_identity_is_trivial() {
        let x = circle_sset();
        let id = SemiSimplicialMap { levels: vec![vec![0, 1], vec![0, 1]], aug: None };
        let cone = levelwise_cone(&id, &x, &x).unwrap();
        assert!(cone.is_valid());
        let h = reduced_homology(&cone, Ring::Integers).unwrap();
        assert!(h.iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn cone_of_empty_inclusion_adds_disjoint_basepoint() {
        let x = circle_sset();
        let empty = SemiSimplicialSet::empty();
        let inc = SemiSimplicialMap { levels: vec![], aug: None };
        let cone = levelwise_cone(&inc, &empty, &x).unwrap();
        assert!(cone.is_valid());
        let h = reduced_homology(&cone, Ring::Integers).unwrap();
        // unreduced homology of the circle
        assert_eq!(h.iter().map(|g| g.free_rank).sum::<usize>(), 2);
    }

    #[test]
    fn non_injective_map_rejected() {
        let x = circle_sset();
        let fold = SemiSimplicialMap { levels: vec![vec![0, 0], vec![0, 0]], aug: None };
        // folding both vertices together is not even a valid ssmap here;
        // build a target where it is: a single loop... instead check the
        // injectivity error fires before deeper validation on a legal map.
        let y = SemiSimplicialSet::new(
            None,
            vec![vec![String::from("a")], vec![String::from("e")]],
            vec![vec![vec![]], vec![vec![0, 0]]],
            false,
        )
        .unwrap();
        let m = SemiSimplicialMap { levels: vec![vec![0, 0], vec![0, 0]], aug: None };
        assert_eq!(levelwise_cone(&m, &x, &y).unwrap_err(), SsetError::NotInjective { level: 0 });
        let _ = fold;
    }

    #[test]
    fn connectivity_of_empty_augmented_set() {
        let x = SemiSimplicialSet::new(Some(vec![String::from("")]), vec![], vec![], false).unwrap();
        assert_eq!(x.homological_connectivity(Ring::Integers).unwrap(), Connectivity::Bounded(-2));
    }

    #[test]
    fn connectivity_of_augmented_point_is_contractible() {
        let x = SemiSimplicialSet::new(
            Some(vec![String::from("")]),
            vec![vec![String::from("p")]],
            vec![vec![vec![0]]],
            false,
        )
        .unwrap();
        assert_eq!(
            x.homological_connectivity(Ring::Integers).unwrap(),
            Connectivity::ContractibleRange
        );
    }
}
