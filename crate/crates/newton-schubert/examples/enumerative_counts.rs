//! Closed-form enumerative counts for rational plane curves and pencils.

use newton_schubert::enumerate::{count_nets, count_webs, hyperstalls, ranestad, scherbak};

fn main() {
    println!("pencils with ramification weights q on G(2, n+2) [scherbak]:");
    for (q, n) in [
        (vec![2, 2, 2], 3u32),
        (vec![3, 3, 2], 4),
        (vec![2, 2, 2, 2], 4),
        (vec![4, 3, 3, 2], 6),
    ] {
        println!("  q = {q:?}, n = {n}: {}", scherbak(&q, n));
    }

    println!("\nplane curves of degree n+2 with a flexes, b hyperflexes,");
    println!("c cusps, d tacnodes (a + 2b + 2c + 3d = 3n) [nets]:");
    for (a, b, c, d, n) in [
        (9, 0, 0, 0, 3u32),
        (5, 2, 0, 0, 3),
        (3, 0, 3, 0, 3),
        (0, 0, 0, 3, 3),
        (6, 0, 0, 2, 4),
    ] {
        println!(
            "  N_{{{a},{b},{c},{d}}} (degree {}) = {}",
            n + 2,
            count_nets(a, b, c, d, n)
        );
    }

    println!("\nspace curves of degree n+3 with a stalls, b hyperstalls,");
    println!("c flexes, d cusps (a + 2b + 2c + 3d = 4n) [webs]:");
    for (a, b, c, d, n) in [
        (8, 0, 0, 0, 2u32),
        (4, 2, 0, 0, 2),
        (0, 0, 1, 2, 2),
        (2, 0, 3, 0, 2),
    ] {
        println!(
            "  W_{{{a},{b},{c},{d}}} (degree {}) = {}",
            n + 3,
            count_webs(a, b, c, d, n)
        );
    }

    println!("\nall-hyperstall counts HS(n) = integral of D_2^{{2n}} on G(4, n+4):");
    for n in 0..=8 {
        println!("  HS({n}) = {}", hyperstalls(n));
    }

    println!("\nrational space curves with 2n flexes at prescribed points [ranestad]:");
    for n in [3, 5, 7] {
        println!("  f(n = {n}) = {}", ranestad(n));
    }
}
