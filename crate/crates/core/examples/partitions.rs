//! Generator walks around Z12 and the symmetric partitions of the octave.

use nearsym::pcset::PitchClass;
use nearsym::{cycle_from_generator, generators_of_z12, symmetric_partition};

fn main() -> nearsym::Result<()> {
    println!("generators: {:?}", generators_of_z12());

    let fifths: Vec<String> = cycle_from_generator(7, PitchClass::C)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("circle of fifths: {}", fifths.join(" "));

    for n in [3, 4, 6] {
        let p = symmetric_partition(n)?;
        let cells: Vec<String> = p.cells.iter().map(ToString::to_string).collect();
        println!("n={n}: {}", cells.join(" "));
    }

    // 5 does not divide the octave
    assert!(symmetric_partition(5).is_err());
    Ok(())
}
