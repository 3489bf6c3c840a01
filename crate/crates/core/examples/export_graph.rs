//! DOT and JSON exports of a region graph. Pipe the DOT through `dot -Tsvg`.

use nearsym::export::export_graph_with;
use nearsym::{export_graph, region_of, Accidentals, Chord, Format, Genus, RegionDocument, RegionKind};

fn main() -> nearsym::Result<()> {
    let hexatonic = region_of(&Chord::parse("C+", Genus::Triads)?, RegionKind::Bridge);
    print!("{}", export_graph_with(&hexatonic, Format::Dot, Accidentals::Flats));

    let spider = region_of(&Chord::parse("C+", Genus::Tristan)?, RegionKind::Arthropod);
    let json = export_graph(&spider, Format::Json);
    println!("{json}");

    // documents round-trip back to the region they describe
    let doc: RegionDocument = serde_json::from_str(&json).expect("valid json");
    assert_eq!(doc.to_region()?, spider);
    Ok(())
}
