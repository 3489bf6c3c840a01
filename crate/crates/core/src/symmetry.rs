//! Cyclic orderings of Z12 and the symmetric partitions of the octave.

use std::collections::BTreeSet;

use crate::chord::Genus;
use crate::error::{Error, Result};
use crate::pcset::{PcSet, PitchClass};

/// The units of Z12.
pub fn generators_of_z12() -> BTreeSet<u8> {
    (1..12u8).filter(|&g| gcd(g, 12) == 1).collect()
}

fn gcd(mut a: u8, mut b: u8) -> u8 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Walks Z12 from `start` by repeated addition of `generator`.
pub fn cycle_from_generator(generator: i64, start: PitchClass) -> Result<Vec<PitchClass>> {
    let g = generator.rem_euclid(12) as u8;
    if !generators_of_z12().contains(&g) {
        return Err(Error::NotAGenerator(generator));
    }
    Ok((0..12)
        .map(|k| start.transpose(k * g as i32))
        .collect())
}

/// The 12/n disjoint cells of one genus, each spaced by 12/n semitones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPartition {
    pub genus: Genus,
    /// Ordered by smallest member.
    pub cells: Vec<PcSet>,
}

impl SymmetricPartition {
    pub fn n(&self) -> usize {
        self.genus.cardinality()
    }
}

pub fn symmetric_partition(n: i64) -> Result<SymmetricPartition> {
    let genus = Genus::from_cardinality(n)?;
    Ok(partition_of(genus))
}

pub fn partition_of(genus: Genus) -> SymmetricPartition {
    let step = genus.step();
    let cells = (0..step).map(|p| cell_containing(genus, PitchClass::new(p))).collect();
    SymmetricPartition { genus, cells }
}

/// `{p, p + 12/n, p + 2*12/n, ...}`
pub fn cell_containing(genus: Genus, pc: PitchClass) -> PcSet {
    let step = genus.step();
    (0..genus.cardinality() as i32)
        .map(|k| pc.transpose(k * step))
        .collect()
}

/// The genus whose partition has `cell` as one of its cells, if any.
pub fn genus_of_cell(cell: PcSet) -> Option<Genus> {
    let genus = Genus::from_cardinality(cell.len() as i64).ok()?;
    let min = cell.min()?;
    (cell_containing(genus, min) == cell).then_some(genus)
}
