//! Pseudoline arrangements encoded as wiring diagrams.
//!
//! Wires run left to right and start at positions `0..n` from top to bottom.
//! Each event takes the wires at a run of consecutive positions, lets them
//! meet in a single point and reverses their order. Pairs of wires may cross
//! at most once; pairs that never cross are parallel pseudolines.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::{FaceRecord, Sign, SignVector};
use crate::poset::{Flat, FlatId, Semilattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingEvent {
    pub top: usize,
    pub size: usize,
}

impl CrossingEvent {
    pub fn new(top: usize, size: usize) -> Self {
        CrossingEvent { top, size }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WiringDiagram {
    pub wires: usize,
    pub events: Vec<CrossingEvent>,
}

impl WiringDiagram {
    pub fn new(wires: usize, events: impl IntoIterator<Item = (usize, usize)>) -> Self {
        WiringDiagram {
            wires,
            events: events.into_iter().map(|(top, size)| CrossingEvent::new(top, size)).collect(),
        }
    }

    /// Simulates the diagram, checking every event fits and no pair of wires
    /// crosses twice.
    pub fn validate(self) -> Result<ValidatedWiring> {
        if self.wires == 0 {
            return Err(Error::NoWires);
        }
        let n = self.wires;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut crossed = vec![false; n * n];
        let mut event_wires = Vec::with_capacity(self.events.len());
        for (e, ev) in self.events.iter().enumerate() {
            if ev.size < 2 {
                return Err(Error::EventTooSmall { event: e, size: ev.size });
            }
            if ev.top + ev.size > n {
                return Err(Error::OutOfRange { event: e, top: ev.top, size: ev.size, wires: n });
            }
            let block = &mut perm[ev.top..ev.top + ev.size];
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    let (lo, hi) = (a.min(b), a.max(b));
                    if crossed[lo * n + hi] {
                        return Err(Error::RepeatedCrossing { event: e, a: lo, b: hi });
                    }
                    crossed[lo * n + hi] = true;
                }
            }
            event_wires.push(block.iter().copied().collect::<BTreeSet<_>>());
            block.reverse();
        }
        Ok(ValidatedWiring { diagram: self, final_permutation: perm, event_wires })
    }

    /// The same arrangement read right to left.
    pub fn mirrored(&self) -> WiringDiagram {
        WiringDiagram { wires: self.wires, events: self.events.iter().rev().copied().collect() }
    }
}

/// A wiring diagram that passed [`WiringDiagram::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedWiring {
    diagram: WiringDiagram,
    final_permutation: Vec<usize>,
    event_wires: Vec<BTreeSet<usize>>,
}

/// Face counts and faces produced by sweeping a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    /// `(f0, f1, f2)`: crossing points, wire segments, regions.
    pub f_vector: [i64; 3],
    pub faces: Vec<FaceRecord>,
}

impl ValidatedWiring {
    pub fn diagram(&self) -> &WiringDiagram {
        &self.diagram
    }

    pub fn wires(&self) -> usize {
        self.diagram.wires
    }

    pub fn events(&self) -> &[CrossingEvent] {
        &self.diagram.events
    }

    /// Wire at each position after the last event.
    pub fn final_permutation(&self) -> &[usize] {
        &self.final_permutation
    }

    /// Wires meeting at each event.
    pub fn event_wires(&self) -> &[BTreeSet<usize>] {
        &self.event_wires
    }

    fn wire_flat(&self, wire: usize) -> FlatId {
        FlatId(1 + wire)
    }

    fn event_flat(&self, event: usize) -> FlatId {
        FlatId(1 + self.wires() + event)
    }

    /// Plane, one line per wire, one point per event; ordered by incidence.
    pub fn lattice(&self) -> Semilattice {
        let n = self.wires();
        let mut flats = vec![Flat::new(2, [])];
        flats.extend((0..n).map(|w| Flat::new(1, [w])));
        flats.extend(self.event_wires.iter().map(|ws| Flat::new(0, ws.iter().copied())));
        let mut pairs = Vec::new();
        for w in 0..n {
            pairs.push((FlatId(0), self.wire_flat(w)));
        }
        for (e, ws) in self.event_wires.iter().enumerate() {
            for &w in ws {
                pairs.push((self.wire_flat(w), self.event_flat(e)));
            }
        }
        Semilattice::new(2, flats, pairs).expect("wiring diagrams give valid semilattices")
    }

    /// Left-to-right sweep that creates a fresh identity for every region,
    /// wire segment and crossing it meets.
    ///
    /// Interval `i` of a vertical slab lies between positions `i - 1` and
    /// `i`. An event of size `k` closes its `k - 1` interior intervals and
    /// opens `k - 1` new ones to its right. Every face is labeled with the
    /// sign vector seen from it: `+` for wires passing below, `-` for wires
    /// above, `0` for wires through it.
    pub fn sweep(&self) -> Sweep {
        let n = self.wires();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut faces = Vec::new();

        let region_signs = |perm: &[usize], interval: usize| {
            let mut signs = vec![Sign::Minus; n];
            for (pos, &w) in perm.iter().enumerate() {
                if interval <= pos {
                    signs[w] = Sign::Plus;
                }
            }
            SignVector(signs)
        };
        let segment_signs = |perm: &[usize], pos: usize| {
            let mut signs = vec![Sign::Minus; n];
            for (p, &w) in perm.iter().enumerate() {
                signs[w] = match p.cmp(&pos) {
                    std::cmp::Ordering::Equal => Sign::Zero,
                    std::cmp::Ordering::Greater => Sign::Plus,
                    std::cmp::Ordering::Less => Sign::Minus,
                };
            }
            SignVector(signs)
        };

        let mut regions = 0i64;
        let mut segments = 0i64;
        for interval in 0..=n {
            faces.push(FaceRecord { sign_vector: region_signs(&perm, interval), dim: 2, flat: FlatId(0) });
            regions += 1;
        }
        for (pos, &w) in perm.iter().enumerate() {
            faces.push(FaceRecord { sign_vector: segment_signs(&perm, pos), dim: 1, flat: self.wire_flat(w) });
            segments += 1;
        }

        for (e, ev) in self.events().iter().enumerate() {
            let block = ev.top..ev.top + ev.size;
            let mut signs = vec![Sign::Minus; n];
            for (pos, &w) in perm.iter().enumerate() {
                if block.contains(&pos) {
                    signs[w] = Sign::Zero;
                } else if pos >= block.end {
                    signs[w] = Sign::Plus;
                }
            }
            faces.push(FaceRecord { sign_vector: SignVector(signs), dim: 0, flat: self.event_flat(e) });

            perm[block.clone()].reverse();
            for pos in block.clone() {
                faces.push(FaceRecord {
                    sign_vector: segment_signs(&perm, pos),
                    dim: 1,
                    flat: self.wire_flat(perm[pos]),
                });
                segments += 1;
            }
            for interval in ev.top + 1..block.end {
                faces.push(FaceRecord { sign_vector: region_signs(&perm, interval), dim: 2, flat: FlatId(0) });
                regions += 1;
            }
        }

        faces.sort_by(|a, b| a.sign_vector.cmp(&b.sign_vector));
        Sweep { f_vector: [self.events().len() as i64, segments, regions], faces }
    }

    pub fn sweep_f_vector(&self) -> [i64; 3] {
        self.sweep().f_vector
    }
}
