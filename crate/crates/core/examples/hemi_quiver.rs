//! The truncated Gabriel quiver of `V_n ⋊ sl2`, checked edge by edge
//! against `N̂`.

use leibniz::quiver::quiver_hemi;

fn main() -> anyhow::Result<()> {
    for n in 1..=2 {
        let q = quiver_hemi(n, 4, true)?;
        println!("n = {n}: {} vertices, {} arrows", q.vertices.len(), q.arrow_count());
        for ((src, dst), mult) in q.edge_map() {
            println!("  {src} -> {dst} x{mult}");
        }
    }
    println!("\n{}", quiver_hemi(1, 2, false)?.to_dot());
    Ok(())
}
