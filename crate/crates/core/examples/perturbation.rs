//! Nearly symmetric chords as single-semitone displacements of a symmetric cell.

use nearsym::pcset::PitchClass;
use nearsym::symmetry::cell_containing;
use nearsym::{arthropod_collection, parent_symmetric_cell, perturb, Direction, Genus};

fn main() -> nearsym::Result<()> {
    for genus in Genus::ALL {
        let cell = cell_containing(genus, PitchClass::C);
        println!("{} {cell} ({})", genus.symmetric_name(), genus);

        for note in cell.iter() {
            let down = perturb(cell, note, Direction::Down)?;
            let up = perturb(cell, note, Direction::Up)?;
            println!("  {note:>2} down -> {down:<4} up -> {up}");
        }

        let members: Vec<String> = arthropod_collection(cell)?.iter().map(ToString::to_string).collect();
        println!("  {}: {}", genus.arthropod_name(), members.join(" "));
    }

    // every chord remembers where it came from
    let c = nearsym::Chord::parse("C#-", Genus::Tristan)?;
    let origin = parent_symmetric_cell(&c);
    println!("{c} = {} displaced {:?} from {}", origin.note, origin.direction, origin.cell);
    Ok(())
}
