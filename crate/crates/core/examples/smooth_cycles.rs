//! Simple cycles in the bridge regions, counted by length.

use std::collections::BTreeMap;

use nearsym::{enumerate_smooth_cycles, region_of, Chord, Genus, RegionKind};

fn main() -> nearsym::Result<()> {
    for genus in Genus::ALL {
        let region = region_of(&Chord::parse("C+", genus)?, RegionKind::Bridge);
        let cycles = enumerate_smooth_cycles(&region, 4, region.members.len())?;

        let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &cycles {
            *by_len.entry(c.len()).or_default() += 1;
        }
        println!("{}: {} cycles {by_len:?}", region.title(), cycles.len());

        if let Some(first) = cycles.iter().find(|c| c.is_hamiltonian(&region)) {
            let path: Vec<String> = first.chords.iter().map(ToString::to_string).collect();
            println!("  e.g. {} [{}]", path.join(" -> "), first.set_class());
        }
    }

    // arthropod regions have no cycle notion
    let spider = region_of(&Chord::parse("C+", Genus::Tristan)?, RegionKind::Arthropod);
    assert!(enumerate_smooth_cycles(&spider, 4, 8).is_err());
    Ok(())
}
