//! The `P_{m,n}` relation: `m` voices move a semitone, `n` voices move a
//! whole tone, everything else holds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chord::{name_of, Chord};
use crate::error::{Error, Result};
use crate::pcset::{PcSet, PitchClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct VoiceLeading {
    pub semitones: usize,
    pub whole_tones: usize,
}

impl VoiceLeading {
    pub const IDENTITY: VoiceLeading = VoiceLeading::new(0, 0);

    pub const fn new(semitones: usize, whole_tones: usize) -> Self {
        VoiceLeading {
            semitones,
            whole_tones,
        }
    }

    /// Total displacement in semitones.
    pub const fn displacement(self) -> usize {
        self.semitones + 2 * self.whole_tones
    }

    /// Ordering used to pick among competing bijections: total displacement,
    /// then fewer whole-tone moves.
    const fn rank(self) -> (usize, usize) {
        (self.displacement(), self.whole_tones)
    }
}

impl From<(usize, usize)> for VoiceLeading {
    fn from((m, n): (usize, usize)) -> Self {
        VoiceLeading::new(m, n)
    }
}

impl From<VoiceLeading> for (usize, usize) {
    fn from(v: VoiceLeading) -> Self {
        (v.semitones, v.whole_tones)
    }
}

impl fmt::Display for VoiceLeading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{},{}", self.semitones, self.whole_tones)
    }
}

pub fn vl_relation(x: &Chord, y: &Chord) -> Result<Option<VoiceLeading>> {
    if x.genus != y.genus {
        return Err(Error::GenusMismatch {
            expected: x.genus.n(),
            found: y.genus.n(),
        });
    }
    Ok(set_relation(x.pitch_classes(), y.pitch_classes()))
}

/// Most parsimonious bijection between two equal-size sets in which no voice
/// moves further than a whole tone.
///
/// Dynamic program over subsets of target voices: `best[mask]` is the best
/// assignment of the first `popcount(mask)` source voices onto `mask`.
pub fn set_relation(a: PcSet, b: PcSet) -> Option<VoiceLeading> {
    if a.len() != b.len() {
        return None;
    }
    let src: Vec<PitchClass> = a.iter().collect();
    let dst: Vec<PitchClass> = b.iter().collect();
    let k = src.len();
    let mut best: Vec<Option<VoiceLeading>> = vec![None; 1 << k];
    best[0] = Some(VoiceLeading::IDENTITY);
    for mask in 0..(1usize << k) {
        let Some(acc) = best[mask] else { continue };
        let i = mask.count_ones() as usize;
        if i == k {
            continue;
        }
        for (j, target) in dst.iter().enumerate() {
            if mask & (1 << j) != 0 {
                continue;
            }
            let step = match src[i].distance(*target) {
                0 => VoiceLeading::IDENTITY,
                1 => VoiceLeading::new(1, 0),
                2 => VoiceLeading::new(0, 1),
                _ => continue,
            };
            let next = VoiceLeading::new(
                acc.semitones + step.semitones,
                acc.whole_tones + step.whole_tones,
            );
            let slot = &mut best[mask | (1 << j)];
            if slot.is_none_or(|cur| next.rank() < cur.rank()) {
                *slot = Some(next);
            }
        }
    }
    best[(1 << k) - 1]
}

/// Same contract as [`set_relation`], by trying every bijection. Used as the
/// reference in verification; factorial cost, fine for at most six voices.
pub fn exhaustive_relation(a: PcSet, b: PcSet) -> Option<VoiceLeading> {
    if a.len() != b.len() {
        return None;
    }
    let src: Vec<PitchClass> = a.iter().collect();
    let mut dst: Vec<PitchClass> = b.iter().collect();
    let mut best: Option<VoiceLeading> = None;
    permute(&mut dst, 0, &mut |perm| {
        let mut rel = VoiceLeading::IDENTITY;
        for (s, t) in src.iter().zip(perm) {
            match s.distance(*t) {
                0 => {}
                1 => rel.semitones += 1,
                2 => rel.whole_tones += 1,
                _ => return,
            }
        }
        if best.is_none_or(|b| rel.rank() < b.rank()) {
            best = Some(rel);
        }
    });
    best
}

fn permute<T, F: FnMut(&[T])>(items: &mut [T], k: usize, visit: &mut F) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Same-genus chords one single-semitone displacement away.
pub fn ssd_neighbors(x: &Chord) -> Vec<Chord> {
    let pcs = x.pitch_classes();
    let mut out: Vec<Chord> = pcs
        .iter()
        .flat_map(|p| [-1, 1].map(|d| (p, p.transpose(d))))
        .filter(|(_, q)| !pcs.contains(*q))
        .filter_map(|(p, q)| name_of(pcs.without(p).with(q), x.genus).ok())
        .collect();
    out.sort();
    out.dedup();
    out
}
