use genus_walk::{enumerate_genus, WalkOptions};
use lattice_core::lattice_from_symbol;

fn main() {
    let seed = lattice_from_symbol(&std::env::args().nth(1).unwrap()).unwrap();
    let mut opts = WalkOptions::default();
    opts.verbose = true;
    match enumerate_genus(&seed, &opts) {
        Ok(list) => {
            println!("classes: {}", list.classes.len());
            println!("mass: {}", list.mass);
            for c in &list.classes {
                println!("|O| = {}", c.aut_order);
            }
        }
        Err(e) => println!("error: {e}"),
    }
}
