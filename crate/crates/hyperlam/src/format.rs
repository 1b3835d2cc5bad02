//! JSON form of compact sets:
//!
//! ```json
//! {"disks": [{"cx": 0, "cy": 0, "r": 1}],
//!  "segments": [{"x1": 1, "y1": 0, "x2": 2, "y2": 0}],
//!  "polylines": [[[1, 0], [1.5, 0.1]]]}
//! ```
//!
//! `polylines` is optional and holds sampled curves such as Möbius images
//! of slits.

use std::path::Path;

use hyperlam_core::capacity::{CompactSet, Disk, Polyline, Segment};
use hyperlam_core::Complex;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskJson {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentJson {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompactSetJson {
    #[serde(default)]
    pub disks: Vec<DiskJson>,
    #[serde(default)]
    pub segments: Vec<SegmentJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polylines: Vec<Vec<[f64; 2]>>,
}

impl From<&CompactSet> for CompactSetJson {
    fn from(k: &CompactSet) -> Self {
        Self {
            disks: k.disks().iter().map(|d| DiskJson { cx: d.center.re, cy: d.center.im, r: d.radius }).collect(),
            segments: k
                .segments()
                .iter()
                .map(|s| SegmentJson { x1: s.start.re, y1: s.start.im, x2: s.end.re, y2: s.end.im })
                .collect(),
            polylines: k.polylines().iter().map(|p| p.points.iter().map(|z| [z.re, z.im]).collect()).collect(),
        }
    }
}

impl TryFrom<CompactSetJson> for CompactSet {
    type Error = hyperlam_core::Error;

    fn try_from(j: CompactSetJson) -> Result<Self, Self::Error> {
        let disks = j.disks.iter().map(|d| Disk::new(Complex::new(d.cx, d.cy), d.r)).collect();
        let segments = j
            .segments
            .iter()
            .map(|s| Segment::new(Complex::new(s.x1, s.y1), Complex::new(s.x2, s.y2)))
            .collect();
        let polylines = j
            .polylines
            .iter()
            .map(|p| Polyline::new(p.iter().map(|&[x, y]| Complex::new(x, y)).collect()))
            .collect();
        CompactSet::with_polylines(disks, segments, polylines)
    }
}

pub fn parse_compact_set(text: &str) -> Result<CompactSet, CliError> {
    let j: CompactSetJson = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid compact set JSON: {e}")))?;
    Ok(CompactSet::try_from(j)?)
}

pub fn to_json(k: &CompactSet) -> String {
    serde_json::to_string(&CompactSetJson::from(k)).expect("plain data serializes")
}

/// Reads a compact set given inline (`{...}`) or as a file path.
pub fn load_compact_set(arg: &str) -> Result<CompactSet, CliError> {
    if arg.trim_start().starts_with('{') {
        return parse_compact_set(arg);
    }
    let text = std::fs::read_to_string(Path::new(arg))
        .map_err(|e| CliError::Usage(format!("cannot read compact set file `{arg}`: {e}")))?;
    parse_compact_set(&text)
}
