use alloc::vec::Vec;

use crate::{Complex, Error, Result};

/// A closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Complex,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Complex, radius: f64) -> Self {
        Self { center, radius }
    }
}

/// A closed straight segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: Complex,
    pub end: Complex,
}

impl Segment {
    pub fn new(start: Complex, end: Complex) -> Self {
        Self { start, end }
    }

    pub fn length(&self) -> f64 {
        (self.end - self.start).norm()
    }
}

/// A closed polygonal arc through sampled points, used for curves that
/// leave the disk/segment vocabulary (Möbius images of slits).
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<Complex>,
}

impl Polyline {
    pub fn new(points: Vec<Complex>) -> Self {
        Self { points }
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.points.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    pub fn length(&self) -> f64 {
        self.segments().map(|s| s.length()).sum()
    }
}

/// A finite union of closed disks, segments and polylines.
///
/// The set is never empty and never a single point. Whether it is
/// connected is decided once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactSet {
    disks: Vec<Disk>,
    segments: Vec<Segment>,
    polylines: Vec<Polyline>,
    connected: bool,
}

impl CompactSet {
    pub fn new(disks: Vec<Disk>, segments: Vec<Segment>) -> Result<Self> {
        Self::with_polylines(disks, segments, Vec::new())
    }

    pub fn with_polylines(
        disks: Vec<Disk>,
        segments: Vec<Segment>,
        polylines: Vec<Polyline>,
    ) -> Result<Self> {
        if disks.is_empty() && segments.is_empty() && polylines.is_empty() {
            return Err(Error::domain("compact set is empty"));
        }
        for d in &disks {
            if !d.center.is_finite() || !(d.radius > 0.0) || !d.radius.is_finite() {
                return Err(Error::domain("disk needs a finite centre and positive radius"));
            }
        }
        for s in &segments {
            if !s.start.is_finite() || !s.end.is_finite() {
                return Err(Error::domain("segment endpoints must be finite"));
            }
        }
        for p in &polylines {
            if p.points.len() < 2 || p.points.iter().any(|z| !z.is_finite()) {
                return Err(Error::domain("polyline needs at least two finite points"));
            }
        }
        if disks.is_empty() {
            let first = segments
                .first()
                .map(|s| s.start)
                .or_else(|| polylines.first().map(|p| p.points[0]))
                .unwrap_or_default();
            let single = segments.iter().all(|s| s.start == first && s.end == first)
                && polylines.iter().all(|p| p.points.iter().all(|&z| z == first));
            if single {
                return Err(Error::domain("compact set is a single point"));
            }
        }
        let mut set = Self { disks, segments, polylines, connected: false };
        set.connected = set.compute_connected();
        Ok(set)
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn polylines(&self) -> &[Polyline] {
        &self.polylines
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// The union as a new compact set.
    pub fn union(&self, other: &CompactSet) -> CompactSet {
        let mut disks = self.disks.clone();
        disks.extend_from_slice(&other.disks);
        let mut segments = self.segments.clone();
        segments.extend_from_slice(&other.segments);
        let mut polylines = self.polylines.clone();
        polylines.extend(other.polylines.iter().cloned());
        let mut set = CompactSet { disks, segments, polylines, connected: false };
        set.connected = set.compute_connected();
        set
    }

    /// `t·K` for `t > 0`.
    pub fn scaled(&self, t: f64) -> Result<CompactSet> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::domain("scale factor must be positive"));
        }
        let disks = self.disks.iter().map(|d| Disk::new(d.center * t, d.radius * t)).collect();
        let segments = self.segments.iter().map(|s| Segment::new(s.start * t, s.end * t)).collect();
        let polylines = self
            .polylines
            .iter()
            .map(|p| Polyline::new(p.points.iter().map(|&z| z * t).collect()))
            .collect();
        Ok(CompactSet { disks, segments, polylines, connected: self.connected })
    }

    /// Whether the two sets share at least one point.
    pub fn intersects(&self, other: &CompactSet) -> bool {
        let tol = self.tolerance().max(other.tolerance());
        let mine = self.pieces();
        let theirs = other.pieces();
        mine.iter().any(|a| theirs.iter().any(|b| a.touches(b, tol)))
    }

    /// Largest coordinate magnitude, used to scale geometric tolerances.
    pub(crate) fn extent(&self) -> f64 {
        let disks = self.disks.iter().map(|d| d.center.norm() + d.radius);
        let segs = self.segments.iter().flat_map(|s| [s.start.norm(), s.end.norm()]);
        let polys = self.polylines.iter().flat_map(|p| p.points.iter().map(|z| z.norm()));
        disks.chain(segs).chain(polys).fold(0.0, f64::max)
    }

    fn tolerance(&self) -> f64 {
        1e-12 * self.extent().max(1.0)
    }

    fn pieces(&self) -> Vec<Piece<'_>> {
        let mut out = Vec::with_capacity(self.disks.len() + self.segments.len() + self.polylines.len());
        out.extend(self.disks.iter().map(Piece::Disk));
        out.extend(self.segments.iter().map(Piece::Segment));
        out.extend(self.polylines.iter().map(Piece::Polyline));
        out
    }

    fn compute_connected(&self) -> bool {
        let pieces = self.pieces();
        let tol = self.tolerance();
        let mut parent: Vec<usize> = (0..pieces.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..pieces.len() {
            for j in (i + 1)..pieces.len() {
                if pieces[i].touches(&pieces[j], tol) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let root = find(&mut parent, 0);
        (0..pieces.len()).all(|i| find(&mut parent, i) == root)
    }
}

enum Piece<'a> {
    Disk(&'a Disk),
    Segment(&'a Segment),
    Polyline(&'a Polyline),
}

impl Piece<'_> {
    fn touches(&self, other: &Piece<'_>, tol: f64) -> bool {
        use Piece::*;
        match (self, other) {
            (Disk(a), Disk(b)) => (a.center - b.center).norm() <= a.radius + b.radius + tol,
            (Disk(d), Segment(s)) | (Segment(s), Disk(d)) => {
                point_segment_distance(d.center, s) <= d.radius + tol
            }
            (Disk(d), Polyline(p)) | (Polyline(p), Disk(d)) => {
                p.segments().any(|s| point_segment_distance(d.center, &s) <= d.radius + tol)
            }
            (Segment(a), Segment(b)) => segment_distance(a, b) <= tol,
            (Segment(a), Polyline(p)) | (Polyline(p), Segment(a)) => {
                p.segments().any(|s| segment_distance(a, &s) <= tol)
            }
            (Polyline(p), Polyline(q)) => {
                p.segments().any(|a| q.segments().any(|b| segment_distance(&a, &b) <= tol))
            }
        }
    }
}

fn cross(a: Complex, b: Complex) -> f64 {
    a.re * b.im - a.im * b.re
}

pub(crate) fn point_segment_distance(p: Complex, s: &Segment) -> f64 {
    let d = s.end - s.start;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - s.start).norm();
    }
    let t = ((p - s.start) * d.conj()).re / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (s.start + d * t)).norm()
}

fn segment_distance(a: &Segment, b: &Segment) -> f64 {
    let da = a.end - a.start;
    let db = b.end - b.start;
    let o1 = cross(da, b.start - a.start);
    let o2 = cross(da, b.end - a.start);
    let o3 = cross(db, a.start - b.start);
    let o4 = cross(db, a.end - b.start);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return 0.0;
    }
    [
        point_segment_distance(a.start, b),
        point_segment_distance(a.end, b),
        point_segment_distance(b.start, a),
        point_segment_distance(b.end, a),
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min)
}
