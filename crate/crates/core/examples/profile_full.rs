use prym_core::curve::new_curve;
use prym_core::qalg::rat::int;
use prym_core::torelli::{find_nodes, image_symmetry};

fn main() {
    let c52 = new_curve(int(0), int(0), int(1), int(-6), int(5), int(0)).unwrap();
    let c54 = new_curve(int(1), int(-2), int(3), int(-4), int(3), int(0)).unwrap();
    let t = std::time::Instant::now();
    let n = find_nodes(&c52).unwrap();
    eprintln!("find_nodes 5.2: {} nodes in {:?}", n.len(), t.elapsed());
    let t = std::time::Instant::now();
    let n = find_nodes(&c54).unwrap();
    eprintln!("find_nodes 5.4: {} nodes in {:?}", n.len(), t.elapsed());
    let t = std::time::Instant::now();
    let s = image_symmetry(&c54).unwrap();
    eprintln!("symmetry 5.4: {} in {:?}", s, t.elapsed());
    let t = std::time::Instant::now();
    let s = image_symmetry(&c52).unwrap();
    eprintln!("symmetry 5.2: {} in {:?}", s, t.elapsed());
}
