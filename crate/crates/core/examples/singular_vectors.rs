//! Singular-vector checks and twisted Zhu images for the vectors in data/vectors.

use std::path::PathBuf;

use twistvoa::fusion::Level;
use twistvoa::io::read_vector;
use twistvoa::uea::{is_singular, zhu_twisted_image, ModuleKind};

fn main() -> twistvoa::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/vectors");
    let mut files: Vec<_> = std::fs::read_dir(&dir).expect("data/vectors").map(|e| e.unwrap().path()).collect();
    files.sort();
    let lvl = Level::new(2, 3)?;
    for f in files {
        let v = read_vector(&f)?;
        let e = v.element();
        let name = f.file_name().unwrap().to_string_lossy().into_owned();
        let sing = is_singular(&e, &v.module, None)?;
        print!("{name}: {} terms, singular {sing}", e.len());
        if v.module.kind == ModuleKind::Vacuum && e.homogeneous_degree() == Some((0, 3)) {
            let img = zhu_twisted_image(&e, &lvl)?;
            print!(", Zhu image {}", img.polynomial);
        }
        println!();
    }
    Ok(())
}
