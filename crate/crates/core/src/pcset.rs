//! Mod-12 pitch-class arithmetic, set normalization and set-class labels.
//!
//! A [`PcSet`] is a 12-bit mask, so sets are `Copy` and every operation is a
//! handful of bit twiddles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer mod 12, C = 0 through B = 11.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct PitchClass(u8);

impl PitchClass {
    pub const C: PitchClass = PitchClass(0);

    /// Reduces any integer mod 12.
    pub const fn new(value: i32) -> Self {
        PitchClass(value.rem_euclid(12) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn transpose(self, t: i32) -> Self {
        PitchClass::new(self.0 as i32 + t)
    }

    /// Reflection `axis - self`.
    pub const fn invert(self, axis: i32) -> Self {
        PitchClass::new(axis - self.0 as i32)
    }

    /// Minimal circular distance in semitones, 0..=6.
    pub const fn distance(self, other: PitchClass) -> u8 {
        let d = (self.0 as i32 - other.0 as i32).rem_euclid(12) as u8;
        if d > 6 {
            12 - d
        } else {
            d
        }
    }

    pub fn all() -> impl Iterator<Item = PitchClass> {
        (0..12).map(PitchClass)
    }
}

impl From<PitchClass> for u8 {
    fn from(pc: PitchClass) -> u8 {
        pc.0
    }
}

impl TryFrom<u8> for PitchClass {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        if v < 12 {
            Ok(PitchClass(v))
        } else {
            Err(Error::Parse(format!("pitch class {v} out of range 0..=11")))
        }
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

const FULL: u16 = 0x0fff;

/// A set of pitch classes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PcSet(u16);

impl PcSet {
    pub const EMPTY: PcSet = PcSet(0);
    pub const CHROMATIC: PcSet = PcSet(FULL);

    pub const fn from_bits(bits: u16) -> Self {
        PcSet(bits & FULL)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// Builds a set from arbitrary integers, reducing each mod 12.
    pub fn from_ints<I: IntoIterator<Item = i32>>(values: I) -> Self {
        values.into_iter().map(PitchClass::new).collect()
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, pc: PitchClass) -> bool {
        self.0 & (1 << pc.0) != 0
    }

    #[must_use]
    pub const fn with(self, pc: PitchClass) -> Self {
        PcSet(self.0 | (1 << pc.0))
    }

    #[must_use]
    pub const fn without(self, pc: PitchClass) -> Self {
        PcSet(self.0 & !(1 << pc.0))
    }

    #[must_use]
    pub const fn union(self, other: PcSet) -> Self {
        PcSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: PcSet) -> Self {
        PcSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: PcSet) -> Self {
        PcSet(self.0 & !other.0)
    }

    #[must_use]
    pub const fn complement(self) -> Self {
        PcSet(!self.0 & FULL)
    }

    pub const fn is_disjoint(self, other: PcSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: PcSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = PitchClass> {
        (0..12u8).filter(move |i| self.0 & (1 << i) != 0).map(PitchClass)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().map(PitchClass::value).collect()
    }

    pub fn min(self) -> Option<PitchClass> {
        (!self.is_empty()).then(|| PitchClass(self.0.trailing_zeros() as u8))
    }

    /// Every member shifted by `t` semitones.
    #[must_use]
    pub const fn transpose(self, t: i32) -> Self {
        let r = t.rem_euclid(12) as u32;
        let bits = self.0 as u32;
        PcSet((((bits << r) | (bits >> (12 - r))) & FULL as u32) as u16)
    }

    /// Every member `x` replaced by `axis - x`.
    #[must_use]
    pub fn invert(self, axis: i32) -> Self {
        self.iter().map(|pc| pc.invert(axis)).collect()
    }
}

impl FromIterator<PitchClass> for PcSet {
    fn from_iter<I: IntoIterator<Item = PitchClass>>(iter: I) -> Self {
        PcSet(iter.into_iter().fold(0, |acc, pc| acc | (1 << pc.0)))
    }
}

impl fmt::Display for PcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, pc) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{pc}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for PcSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PcSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<u8>::deserialize(d)?;
        members
            .into_iter()
            .map(|v| PitchClass::try_from(v).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Prime form plus the Forte name when it is one of the embedded classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetClassLabel {
    pub forte_name: Option<&'static str>,
    pub prime_form: Vec<u8>,
}

impl SetClassLabel {
    /// Forte name if known, otherwise the prime form as `[0,1,...]`.
    pub fn display_name(&self) -> String {
        match self.forte_name {
            Some(name) => name.to_string(),
            None => {
                let inner: Vec<String> = self.prime_form.iter().map(u8::to_string).collect();
                format!("[{}]", inner.join(","))
            }
        }
    }
}

impl fmt::Display for SetClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.display_name())
    }
}

// Only the classes this crate actually talks about.
const FORTE_TABLE: &[(&str, &[u8])] = &[
    ("3-11", &[0, 3, 7]),
    ("3-12", &[0, 4, 8]),
    ("4-21", &[0, 2, 4, 6]),
    ("4-24", &[0, 2, 4, 8]),
    ("4-25", &[0, 2, 6, 8]),
    ("4-27", &[0, 2, 5, 8]),
    ("4-28", &[0, 3, 6, 9]),
    ("6-20", &[0, 1, 4, 5, 8, 9]),
    ("6-34", &[0, 1, 3, 5, 7, 9]),
    ("6-35", &[0, 2, 4, 6, 8, 10]),
    ("8-28", &[0, 1, 3, 4, 6, 7, 9, 10]),
    ("12-1", &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]),
];

/// Looks up the prime form registered under a Forte name.
pub fn forte_prime(name: &str) -> Option<&'static [u8]> {
    FORTE_TABLE.iter().find(|(n, _)| *n == name).map(|(_, p)| *p)
}

/// Normalized prime form as a bitmask (always contains 0).
///
/// Exhaustive over the 12 transpositions of the set and of its inversion:
/// among the images containing 0, pick the smallest span, then the
/// lexicographically smallest ascending member list.
pub fn prime_bits(s: PcSet) -> Option<PcSet> {
    if s.is_empty() {
        return None;
    }
    let inverted = s.invert(0);
    let mut best: Option<(u8, Vec<u8>, PcSet)> = None;
    for base in [s, inverted] {
        for t in 0..12 {
            let image = base.transpose(t);
            if !image.contains(PitchClass::C) {
                continue;
            }
            let members = image.to_vec();
            let span = *members.last().expect("non-empty");
            let better = match &best {
                None => true,
                Some((bs, bm, _)) => (span, &members) < (*bs, bm),
            };
            if better {
                best = Some((span, members, image));
            }
        }
    }
    best.map(|(_, _, image)| image)
}

pub fn prime_form(s: PcSet) -> Result<SetClassLabel> {
    let prime = prime_bits(s).ok_or(Error::EmptySet)?.to_vec();
    let forte_name = FORTE_TABLE
        .iter()
        .find(|(_, p)| *p == prime.as_slice())
        .map(|(n, _)| *n);
    Ok(SetClassLabel {
        forte_name,
        prime_form: prime,
    })
}

/// Entry `i` counts unordered pairs at interval class `i + 1`.
pub fn interval_class_vector(s: PcSet) -> [u8; 6] {
    let members: Vec<PitchClass> = s.iter().collect();
    let mut icv = [0u8; 6];
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            icv[a.distance(*b) as usize - 1] += 1;
        }
    }
    icv
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[i32]) -> PcSet {
        PcSet::from_ints(v.iter().copied())
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(set(&[0, 4, 7]).transpose(0), set(&[0, 4, 7]));
        assert_eq!(set(&[0, 4, 8]).transpose(1), set(&[1, 5, 9]));
        assert_eq!(
            set(&[0, 2, 4, 6, 8, 10]).transpose(1),
            set(&[1, 3, 5, 7, 9, 11])
        );
        assert_eq!(set(&[11]).transpose(1), set(&[0]));
        assert_eq!(set(&[0]).transpose(-1), set(&[11]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(set(&[0]).invert(0), set(&[0]));
        assert_eq!(set(&[0, 4, 7]).invert(0), set(&[0, 5, 8]));
        assert_eq!(
            set(&[0, 1, 4, 6, 8, 10]).invert(0),
            set(&[0, 2, 4, 6, 8, 11])
        );
    }

    #[test]
    fn prime_form_examples() {
        let aug = prime_form(set(&[0, 4, 8])).unwrap();
        assert_eq!(aug.prime_form, vec![0, 4, 8]);
        assert_eq!(aug.forte_name, Some("3-12"));

        let hex = prime_form(set(&[0, 3, 4, 7, 8, 11])).unwrap();
        assert_eq!(hex.prime_form, vec![0, 1, 4, 5, 8, 9]);
        assert_eq!(hex.forte_name, Some("6-20"));

        let fr = prime_form(set(&[0, 2, 6, 8])).unwrap();
        assert_eq!(fr.prime_form, vec![0, 2, 6, 8]);
        assert_eq!(fr.forte_name, Some("4-25"));
    }

    #[test]
    fn prime_form_of_named_chords() {
        assert_eq!(prime_form(set(&[0, 4, 7, 10])).unwrap().forte_name, Some("4-27"));
        assert_eq!(prime_form(set(&[0, 3, 6, 10])).unwrap().forte_name, Some("4-27"));
        assert_eq!(
            prime_form(set(&[0, 1, 4, 6, 8, 10])).unwrap().forte_name,
            Some("6-34")
        );
        assert_eq!(prime_form(set(&[0, 4, 7])).unwrap().forte_name, Some("3-11"));
        assert_eq!(prime_form(PcSet::CHROMATIC).unwrap().forte_name, Some("12-1"));
        let unnamed = prime_form(set(&[0, 1, 2])).unwrap();
        assert_eq!(unnamed.forte_name, None);
        assert_eq!(unnamed.display_name(), "[0,1,2]");
    }

    #[test]
    fn prime_form_rejects_empty() {
        assert_eq!(prime_form(PcSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn icv_examples() {
        assert_eq!(interval_class_vector(PcSet::EMPTY), [0; 6]);
        assert_eq!(
            interval_class_vector(set(&[0, 1, 3, 5, 7, 9])),
            [1, 4, 2, 4, 2, 2]
        );
        assert_eq!(
            interval_class_vector(set(&[0, 2, 4, 6, 8, 10])),
            [0, 6, 0, 6, 0, 3]
        );
    }

    #[test]
    fn forte_table_entries_are_prime() {
        for (name, prime) in FORTE_TABLE {
            let s = PcSet::from_ints(prime.iter().map(|&p| p as i32));
            assert_eq!(prime_form(s).unwrap().prime_form, prime.to_vec(), "{name}");
        }
    }

    #[test]
    fn serde_uses_member_lists() {
        let s = set(&[0, 4, 7]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[0,4,7]");
        assert_eq!(serde_json::from_str::<PcSet>(&json).unwrap(), s);
        assert!(serde_json::from_str::<PcSet>("[12]").is_err());
    }

    fn any_set() -> impl Strategy<Value = PcSet> {
        (0u16..=0x0fff).prop_map(PcSet::from_bits)
    }

    proptest! {
        #[test]
        fn transposition_composes(s in any_set(), a in -24i32..24, b in -24i32..24) {
            prop_assert_eq!(s.transpose(a).transpose(b), s.transpose((a + b).rem_euclid(12)));
        }

        #[test]
        fn inversion_is_an_involution(s in any_set(), a in -24i32..24) {
            prop_assert_eq!(s.invert(a).invert(a), s);
        }

        #[test]
        fn transpose_preserves_cardinality(s in any_set(), t in -24i32..24) {
            prop_assert_eq!(s.transpose(t).len(), s.len());
        }

        #[test]
        fn prime_form_is_tn_tni_invariant(s in any_set(), t in 0i32..12, a in 0i32..12) {
            prop_assume!(!s.is_empty());
            let p = prime_form(s).unwrap();
            prop_assert_eq!(&prime_form(s.transpose(t)).unwrap(), &p);
            prop_assert_eq!(&prime_form(s.invert(a)).unwrap(), &p);
        }

        #[test]
        fn icv_is_tn_tni_invariant(s in any_set(), t in 0i32..12, a in 0i32..12) {
            let v = interval_class_vector(s);
            prop_assert_eq!(interval_class_vector(s.transpose(t)), v);
            prop_assert_eq!(interval_class_vector(s.invert(a)), v);
        }
    }
}
