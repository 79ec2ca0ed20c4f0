//! Surface bookkeeping: compact orientable/non-orientable surface types,
//! the elementary stabilization maps, arc-cut arithmetic, and stability
//! range reports driven by solved recurrence tables.

use alloc::format;
use alloc::string::String;

use crate::ranges::{Family, RangeFn, RangeTable};

/// A compact surface with boundary: orientable of genus `g`, or
/// non-orientable of genus `n` (counting crosscaps).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceType {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceType {
    pub fn orientable(genus: u32, boundary: u32) -> Self {
        SurfaceType { orientable: true, genus, boundary }
    }

    pub fn non_orientable(genus: u32, boundary: u32) -> Self {
        SurfaceType { orientable: false, genus, boundary }
    }

    /// `chi = 2 - 2g - b` (orientable) or `2 - n - b` (non-orientable).
    pub fn euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64 - self.boundary as i64
        } else {
            2 - self.genus as i64 - self.boundary as i64
        }
    }

    /// Compact rendering `S[g=?,b=?,or=?]`.
    pub fn render(&self) -> String {
        format!(
            "S[g={},b={},or={}]",
            self.genus,
            self.boundary,
            if self.orientable { "+" } else { "-" }
        )
    }

    /// Parse the `S[g=?,b=?,or=?]` form.
    pub fn parse(s: &str) -> Result<Self, SurfaceError> {
        let inner = s
            .strip_prefix("S[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or(SurfaceError::BadSpec)?;
        let mut genus = None;
        let mut boundary = None;
        let mut orientable = None;
        for part in inner.split(',') {
            let (key, value) = part.split_once('=').ok_or(SurfaceError::BadSpec)?;
            match key {
                "g" => genus = Some(value.parse().map_err(|_| SurfaceError::BadSpec)?),
                "b" => boundary = Some(value.parse().map_err(|_| SurfaceError::BadSpec)?),
                "or" => {
                    orientable = Some(match value {
                        "+" => true,
                        "-" => false,
                        _ => return Err(SurfaceError::BadSpec),
                    })
                }
                _ => return Err(SurfaceError::BadSpec),
            }
        }
        match (genus, boundary, orientable) {
            (Some(g), Some(b), Some(o)) => {
                Ok(SurfaceType { orientable: o, genus: g, boundary: b })
            }
            _ => Err(SurfaceError::BadSpec),
        }
    }
}

/// The elementary stabilization maps: a pair of pants glued by the legs
/// (`Alpha`), by the waist (`Beta`), a disc (`Gamma`), and a Mobius band
/// with a disc removed (`Mu`, non-orientable only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizationKind {
    Alpha,
    Beta,
    Gamma,
    Mu,
}

/// The arc-cut kinds of the resolutions: arcs with both ends on one
/// boundary (handle cuts; ends coherently oriented in the orientable case,
/// oppositely oriented in the non-orientable case), arcs joining two
/// distinct boundaries (boundary cuts), and one-sided coherently-oriented
/// arcs (Mobius cuts, non-orientable only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutKind {
    Handle,
    Boundary,
    Mobius,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceError {
    BadSpec,
    /// The stabilization kind does not apply to this surface.
    Inapplicable { reason: &'static str },
    /// An arc-cut precondition failed.
    CutBound { reason: &'static str },
    /// The range table solves the wrong family or does not cover the genus.
    TableMismatch,
    /// The table carries no projective-plane data, needed for `Mu`.
    NoProjectiveData,
}

impl core::fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SurfaceError::BadSpec => write!(f, "malformed surface spec (want S[g=?,b=?,or=+/-])"),
            SurfaceError::Inapplicable { reason } => write!(f, "stabilization inapplicable: {reason}"),
            SurfaceError::CutBound { reason } => write!(f, "cut precondition failed: {reason}"),
            SurfaceError::TableMismatch => {
                write!(f, "range table family/domain does not match the surface")
            }
            SurfaceError::NoProjectiveData => {
                write!(f, "range table has no projective-plane parameters (needed for mu)")
            }
        }
    }
}

/// Target of an elementary stabilization map.
///
/// `alpha`: `(g,b) -> (g+1,b-1)` (`(n,b) -> (n+2,b-1)` non-orientable),
/// needs two boundaries to join; `beta`: `b -> b+1`; `gamma`: `b -> b-1`;
/// `mu`: `(n,b) -> (n+1,b)` on non-orientable surfaces.
pub fn stabilization_target(
    s: SurfaceType,
    kind: StabilizationKind,
) -> Result<SurfaceType, SurfaceError> {
    match kind {
        StabilizationKind::Alpha => {
            if s.boundary < 2 {
                return Err(SurfaceError::Inapplicable {
                    reason: "alpha joins two distinct boundaries (b >= 2)",
                });
            }
            Ok(SurfaceType {
                genus: s.genus + if s.orientable { 1 } else { 2 },
                boundary: s.boundary - 1,
                ..s
            })
        }
        StabilizationKind::Beta => {
            if s.boundary < 1 {
                return Err(SurfaceError::Inapplicable {
                    reason: "beta glues to a boundary (b >= 1)",
                });
            }
            Ok(SurfaceType { boundary: s.boundary + 1, ..s })
        }
        StabilizationKind::Gamma => {
            if s.boundary < 1 {
                return Err(SurfaceError::Inapplicable { reason: "no boundary to cap (b >= 1)" });
            }
            Ok(SurfaceType { boundary: s.boundary - 1, ..s })
        }
        StabilizationKind::Mu => {
            if s.orientable {
                return Err(SurfaceError::Inapplicable {
                    reason: "mu acts on non-orientable surfaces only",
                });
            }
            if s.boundary < 1 {
                return Err(SurfaceError::Inapplicable {
                    reason: "mu glues to a boundary (b >= 1)",
                });
            }
            Ok(SurfaceType { genus: s.genus + 1, ..s })
        }
    }
}

/// Cut `m >= 1` arcs of the given kind. Each legal cut raises the Euler
/// characteristic by exactly `m`:
///
/// * orientable handle cut: `(g, r) -> (g - m, r + m)`, needs `b >= 1`,
///   `g >= m`;
/// * orientable boundary cut: `(g, r) -> (g - m + 1, r + m - 2)`, needs
///   `b >= 2`, `g >= m - 1`;
/// * Mobius cut: `(n, r) -> (n - m, r)`, needs non-orientable, `n >= m`;
/// * non-orientable handle cut: `(n, r) -> (n - 2m, r + m)`, needs
///   `n >= 2m`;
/// * non-orientable boundary cut: `(n, r) -> (n - 2m + 2, r + m - 2)`,
///   needs `b >= 2`, `n >= 2(m - 1)`.
pub fn cut(s: SurfaceType, kind: CutKind, m: u32) -> Result<SurfaceType, SurfaceError> {
    if m < 1 {
        return Err(SurfaceError::CutBound { reason: "need at least one arc" });
    }
    let out = match (s.orientable, kind) {
        (true, CutKind::Handle) => {
            if s.boundary < 1 {
                return Err(SurfaceError::CutBound { reason: "handle cut needs b >= 1" });
            }
            if s.genus < m {
                return Err(SurfaceError::CutBound { reason: "handle cut needs g >= m" });
            }
            SurfaceType { genus: s.genus - m, boundary: s.boundary + m, ..s }
        }
        (true, CutKind::Boundary) => {
            if s.boundary < 2 {
                return Err(SurfaceError::CutBound { reason: "boundary cut needs b >= 2" });
            }
            if s.genus + 1 < m {
                return Err(SurfaceError::CutBound { reason: "boundary cut needs g >= m - 1" });
            }
            SurfaceType { genus: s.genus - m + 1, boundary: s.boundary + m - 2, ..s }
        }
        (true, CutKind::Mobius) => {
            return Err(SurfaceError::CutBound {
                reason: "mobius cut needs a non-orientable surface",
            })
        }
        (false, CutKind::Mobius) => {
            if s.genus < m {
                return Err(SurfaceError::CutBound { reason: "mobius cut needs n >= m" });
            }
            SurfaceType { genus: s.genus - m, ..s }
        }
        (false, CutKind::Handle) => {
            if s.boundary < 1 {
                return Err(SurfaceError::CutBound { reason: "handle cut needs b >= 1" });
            }
            if s.genus < 2 * m {
                return Err(SurfaceError::CutBound { reason: "handle cut needs n >= 2m" });
            }
            SurfaceType { genus: s.genus - 2 * m, boundary: s.boundary + m, ..s }
        }
        (false, CutKind::Boundary) => {
            if s.boundary < 2 {
                return Err(SurfaceError::CutBound { reason: "boundary cut needs b >= 2" });
            }
            if s.genus + 2 < 2 * m {
                return Err(SurfaceError::CutBound { reason: "boundary cut needs n >= 2(m-1)" });
            }
            SurfaceType { genus: s.genus - 2 * m + 2, boundary: s.boundary + m - 2, ..s }
        }
    };
    debug_assert_eq!(out.euler_characteristic(), s.euler_characteristic() + m as i64);
    Ok(out)
}

/// A degree bound in a stability statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    UpTo(i64),
    AllDegrees,
}

impl core::fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DegreeBound::UpTo(d) => write!(f, "* <= {d}"),
            DegreeBound::AllDegrees => write!(f, "all degrees"),
        }
    }
}

/// The stability range of one stabilization map, or an explicit refusal to
/// claim anything (closing the last boundary of a non-closeable structure).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityReport {
    Range { epi: DegreeBound, iso: DegreeBound },
    NoClaim { reason: &'static str },
}

/// Flags feeding the report: `beta_split` upgrades the beta isomorphism
/// range by one (the boundary condition bounds a disc, so beta has a right
/// inverse); `closeable` enables the last-boundary clause for gamma.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportFlags {
    pub beta_split: bool,
    pub closeable: bool,
}

/// Stability range of `kind` applied to `s`, looked up in a solved range
/// table:
///
/// * `alpha`: epi up to `F(g)`, iso up to `F(g) - 1`;
/// * `beta`: epi up to `G(g)`, iso up to `G(g) - 1`, upgraded to iso up to
///   `G(g)` when split;
/// * `gamma` with `b >= 2`: epi in all degrees, iso up to `G(g)`;
/// * `gamma` with `b = 1`: iso up to `G(g)`, epi up to `G(g) + 1` when
///   closeable, otherwise no claim;
/// * `mu`: epi up to `H'(n)`, iso up to `H'(n) - 1`.
pub fn stability_range_report(
    kind: StabilizationKind,
    s: SurfaceType,
    table: &RangeTable,
    flags: ReportFlags,
) -> Result<StabilityReport, SurfaceError> {
    let family_matches = match table.family() {
        Family::Oriented => s.orientable,
        Family::NonOrientable => !s.orientable,
    };
    if !family_matches {
        return Err(SurfaceError::TableMismatch);
    }
    let g = s.genus as i64;
    if g > table.max_genus() {
        return Err(SurfaceError::TableMismatch);
    }
    let lookup = |func: RangeFn| table.value(func, g);
    match kind {
        StabilizationKind::Alpha => {
            stabilization_target(s, kind)?;
            let f = lookup(RangeFn::F);
            Ok(StabilityReport::Range {
                epi: DegreeBound::UpTo(f),
                iso: DegreeBound::UpTo(f - 1),
            })
        }
        StabilizationKind::Beta => {
            stabilization_target(s, kind)?;
            let gg = lookup(RangeFn::G);
            let iso = if flags.beta_split { gg } else { gg - 1 };
            Ok(StabilityReport::Range {
                epi: DegreeBound::UpTo(gg),
                iso: DegreeBound::UpTo(iso),
            })
        }
        StabilizationKind::Gamma => {
            stabilization_target(s, kind)?;
            let gg = lookup(RangeFn::G);
            if s.boundary >= 2 {
                Ok(StabilityReport::Range {
                    epi: DegreeBound::AllDegrees,
                    iso: DegreeBound::UpTo(gg),
                })
            } else if flags.closeable {
                Ok(StabilityReport::Range {
                    epi: DegreeBound::UpTo(gg + 1),
                    iso: DegreeBound::UpTo(gg),
                })
            } else {
                Ok(StabilityReport::NoClaim {
                    reason: "closing the last boundary of a non-closeable structure",
                })
            }
        }
        StabilizationKind::Mu => {
            stabilization_target(s, kind)?;
            if !table.has_projective_data() {
                return Err(SurfaceError::NoProjectiveData);
            }
            let h = lookup(RangeFn::H);
            Ok(StabilityReport::Range {
                epi: DegreeBound::UpTo(h),
                iso: DegreeBound::UpTo(h - 1),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranges::{solve, RangeSystem};

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(SurfaceType::orientable(0, 1).euler_characteristic(), 1);
        assert_eq!(SurfaceType::orientable(2, 3).euler_characteristic(), -5);
        assert_eq!(SurfaceType::non_orientable(3, 1).euler_characteristic(), -2);
    }

    #[test]
    fn parse_render_roundtrip() {
        for spec in ["S[g=3,b=1,or=+]", "S[g=0,b=0,or=-]", "S[g=12,b=7,or=+]"] {
            let s = SurfaceType::parse(spec).unwrap();
            assert_eq!(s.render(), spec);
        }
        assert!(SurfaceType::parse("S[g=1,b=2]").is_err());
        assert!(SurfaceType::parse("T[g=1,b=2,or=+]").is_err());
    }

    #[test]
    fn stabilization_examples() {
        let t = stabilization_target(SurfaceType::orientable(1, 2), StabilizationKind::Alpha)
            .unwrap();
        assert_eq!(t, SurfaceType::orientable(2, 1));
        let t = stabilization_target(SurfaceType::non_orientable(3, 1), StabilizationKind::Mu)
            .unwrap();
        assert_eq!(t, SurfaceType::non_orientable(4, 1));
        assert!(
            stabilization_target(SurfaceType::orientable(5, 0), StabilizationKind::Gamma).is_err()
        );
        assert!(
            stabilization_target(SurfaceType::orientable(5, 2), StabilizationKind::Mu).is_err()
        );
    }

    #[test]
    fn alpha_then_beta_restores_boundary_count() {
        let s = SurfaceType::orientable(3, 4);
        let t = stabilization_target(s, StabilizationKind::Alpha).unwrap();
        let t = stabilization_target(t, StabilizationKind::Beta).unwrap();
        assert_eq!(t, SurfaceType::orientable(4, 4));
    }

    #[test]
    fn cut_golden_examples() {
        // handle cut on an orientable surface
        let s = cut(SurfaceType::orientable(3, 1), CutKind::Handle, 2).unwrap();
        assert_eq!(s, SurfaceType::orientable(1, 3));
        // mobius cut
        let s = cut(SurfaceType::non_orientable(5, 2), CutKind::Mobius, 3).unwrap();
        assert_eq!(s, SurfaceType::non_orientable(2, 2));
        // single boundary cut keeps the genus
        let s = cut(SurfaceType::orientable(2, 2), CutKind::Boundary, 1).unwrap();
        assert_eq!(s, SurfaceType::orientable(2, 1));
    }

    #[test]
    fn cut_composition_identity() {
        // an m-arc boundary cut = one boundary cut then m-1 handle cuts
        for g in 1..6u32 {
            for b in 2..5u32 {
                for m in 2..=g {
                    let direct = cut(SurfaceType::orientable(g, b), CutKind::Boundary, m);
                    let staged = cut(SurfaceType::orientable(g, b), CutKind::Boundary, 1)
                        .and_then(|s| cut(s, CutKind::Handle, m - 1));
                    assert_eq!(direct, staged, "g={g} b={b} m={m}");
                }
            }
        }
        // non-orientable analogue
        for n in 2..8u32 {
            for m in 2..=(n / 2 + 1) {
                let direct = cut(SurfaceType::non_orientable(n, 3), CutKind::Boundary, m);
                let staged = cut(SurfaceType::non_orientable(n, 3), CutKind::Boundary, 1)
                    .and_then(|s| cut(s, CutKind::Handle, m - 1));
                assert_eq!(direct, staged, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn report_examples_from_solved_tables() {
        let oriented = solve(&RangeSystem::oriented(0, 1, 10)).unwrap();
        let rep = stability_range_report(
            StabilizationKind::Alpha,
            SurfaceType::orientable(5, 2),
            &oriented,
            ReportFlags::default(),
        )
        .unwrap();
        assert_eq!(
            rep,
            StabilityReport::Range { epi: DegreeBound::UpTo(3), iso: DegreeBound::UpTo(2) }
        );
        let rep = stability_range_report(
            StabilizationKind::Beta,
            SurfaceType::orientable(3, 1),
            &oriented,
            ReportFlags { beta_split: true, closeable: false },
        )
        .unwrap();
        assert_eq!(
            rep,
            StabilityReport::Range { epi: DegreeBound::UpTo(2), iso: DegreeBound::UpTo(2) }
        );
        let nonor = solve(&RangeSystem::non_orientable(0, 1, Some((0, 1)), 12)).unwrap();
        let rep = stability_range_report(
            StabilizationKind::Mu,
            SurfaceType::non_orientable(9, 1),
            &nonor,
            ReportFlags::default(),
        )
        .unwrap();
        assert_eq!(
            rep,
            StabilityReport::Range { epi: DegreeBound::UpTo(3), iso: DegreeBound::UpTo(2) }
        );
        // gamma on the last boundary without closeability: no claim
        let rep = stability_range_report(
            StabilizationKind::Gamma,
            SurfaceType::orientable(4, 1),
            &oriented,
            ReportFlags::default(),
        )
        .unwrap();
        assert!(matches!(rep, StabilityReport::NoClaim { .. }));
    }
}
