//! Runs the built-in verification suite and prints the report.

use nearsym::Genus;

fn main() {
    let genus = std::env::args()
        .nth(1)
        .map(|n| Genus::from_cardinality(n.parse().expect("genus is 3, 4 or 6")).expect("genus is 3, 4 or 6"));
    let report = nearsym::verify::run(genus);
    print!("{}", report.render_text());
    if !report.all_passed() {
        std::process::exit(1);
    }
}
