//! Regenerates `fixtures/*.json`.

use std::path::Path;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir)?;
    for (stem, text) in bihom_cli::samples::fixtures()? {
        std::fs::write(dir.join(format!("{stem}.json")), text)?;
    }
    Ok(())
}
