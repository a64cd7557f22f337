// Regenerates data/catalog (every group of order <= 16 as a table file) and
// data/fixtures (the small corpus used by the CLI tests and the acceptance
// suite). Usage: grcat-make-fixtures <data-dir>

#include <filesystem>
#include <iostream>

#include "grcat/catalog.hpp"
#include "grcat/io.hpp"

namespace fs = std::filesystem;

namespace {

void emit_catalog(const fs::path& dir) {
  for (const auto& entry : grcat::small_group_catalog()) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d", entry.group.order());
    fs::path file = dir / ("order" + std::string(buf) + "_" + entry.name + ".json");
    grcat::io::write_file(file, grcat::io::serialize(entry.group));
  }
}

void emit_fixtures(const fs::path& dir) {
  using grcat::io::write_file;

  // Leaf objects in canonical serialized form.
  write_file(dir / "groups/c2.json", grcat::io::serialize(grcat::cyclic_group(2)));
  write_file(dir / "groups/c3.json", grcat::io::serialize(grcat::cyclic_group(3)));
  write_file(dir / "groups/c4.json", grcat::io::serialize(grcat::cyclic_group(4)));
  write_file(dir / "groups/c2c2.json",
             grcat::io::serialize(grcat::direct_product(grcat::cyclic_group(2),
                                                        grcat::cyclic_group(2))));
  write_file(dir / "groups/s3.json", grcat::io::serialize(grcat::dihedral_group(3)));
  write_file(dir / "groups/q8.json", grcat::io::serialize(grcat::dicyclic_group(2)));
  write_file(dir / "abelian/z2.json",
             grcat::io::serialize(grcat::AbelianGroup({2})));
  write_file(dir / "abelian/z3.json",
             grcat::io::serialize(grcat::AbelianGroup({3})));
  write_file(dir / "abelian/z4.json",
             grcat::io::serialize(grcat::AbelianGroup({4})));

  // Composite fixtures keep explicit $refs (diff-friendly corpora).
  write_file(dir / "modules/z2_on_z2_trivial.json", R"({
  "group": {"$ref": "../groups/c2.json"},
  "carrier": {"$ref": "../abelian/z2.json"},
  "action": {"0": [[1]], "1": [[1]]}
}
)");
  write_file(dir / "modules/z2_on_z4_negation.json", R"({
  "group": {"$ref": "../groups/c2.json"},
  "carrier": {"$ref": "../abelian/z4.json"},
  "action": {"0": [[1]], "1": [[3]]}
}
)");
  write_file(dir / "modules/z3_on_z3_trivial.json", R"({
  "group": {"$ref": "../groups/c3.json"},
  "carrier": {"$ref": "../abelian/z3.json"},
  "action": {"0": [[1]], "1": [[1]], "2": [[1]]}
}
)");
  write_file(dir / "modules/s3_on_z2_trivial.json", R"({
  "group": {"$ref": "../groups/s3.json"},
  "carrier": {"$ref": "../abelian/z2.json"},
  "action": {"0": [[1]], "1": [[1]], "2": [[1]], "3": [[1]], "4": [[1]], "5": [[1]]}
}
)");

  write_file(dir / "cochains/xi0_z2_z2.json", R"({
  "degree": 3,
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "values": {}
}
)");
  write_file(dir / "cochains/xi1_z2_z2.json", R"({
  "degree": 3,
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "values": {"1,1,1": [1]}
}
)");
  write_file(dir / "cochains/xi0_z2_z4neg.json", R"({
  "degree": 3,
  "module": {"$ref": "../modules/z2_on_z4_negation.json"},
  "values": {}
}
)");
  write_file(dir / "cochains/g0_z2_z2.json", R"({
  "degree": 2,
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "values": {}
}
)");
  write_file(dir / "cochains/g1_z2_z2.json", R"({
  "degree": 2,
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "values": {"1,1": [1]}
}
)");
  // Invalid on purpose: nonzero value on an identity tuple.
  write_file(dir / "cochains/bad_identity_tuple.json", R"({
  "degree": 3,
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "values": {"1,0,1": [1]}
}
)");

  write_file(dir / "grtypes/z2_z2_xi0.json", R"({
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "xi": {"$ref": "../cochains/xi0_z2_z2.json"}
}
)");
  write_file(dir / "grtypes/z2_z2_xi1.json", R"({
  "module": {"$ref": "../modules/z2_on_z2_trivial.json"},
  "xi": {"$ref": "../cochains/xi1_z2_z2.json"}
}
)");
  write_file(dir / "grtypes/z2_z4neg_xi0.json", R"({
  "module": {"$ref": "../modules/z2_on_z4_negation.json"},
  "xi": {"$ref": "../cochains/xi0_z2_z4neg.json"}
}
)");

  write_file(dir / "functors/id_z2_z2_xi0.json", R"({
  "source": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "target": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "phi": [0, 1],
  "f": [[1]]
}
)");
  write_file(dir / "functors/id_z2_z2_xi0_g0.json", R"({
  "source": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "target": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "phi": [0, 1],
  "f": [[1]],
  "g": {"$ref": "../cochains/g0_z2_z2.json"}
}
)");
  write_file(dir / "functors/id_z2_z2_xi0_g1.json", R"({
  "source": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "target": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "phi": [0, 1],
  "f": [[1]],
  "g": {"$ref": "../cochains/g1_z2_z2.json"}
}
)");
  write_file(dir / "functors/obstructed_z2_z2.json", R"({
  "source": {"$ref": "../grtypes/z2_z2_xi0.json"},
  "target": {"$ref": "../grtypes/z2_z2_xi1.json"},
  "phi": [0, 1],
  "f": [[1]]
}
)");
  write_file(dir / "functors/id_z2_z4neg.json", R"({
  "source": {"$ref": "../grtypes/z2_z4neg_xi0.json"},
  "target": {"$ref": "../grtypes/z2_z4neg_xi0.json"},
  "phi": [0, 1],
  "f": [[1]]
}
)");

  write_file(dir / "kernels/c4_by_c2.json", R"({
  "pi": {"$ref": "../groups/c2.json"},
  "g": {"$ref": "../groups/c4.json"},
  "psi": [0, 1]
}
)");
  write_file(dir / "kernels/s3_by_c2.json", R"({
  "pi": {"$ref": "../groups/c2.json"},
  "g": {"$ref": "../groups/s3.json"},
  "psi": [0, 0]
}
)");
  write_file(dir / "kernels/q8_by_c2.json", R"({
  "pi": {"$ref": "../groups/c2.json"},
  "g": {"$ref": "../groups/q8.json"},
  "psi": [0, 0]
}
)");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: grcat-make-fixtures <data-dir>\n";
    return 2;
  }
  fs::path root = argv[1];
  emit_catalog(root / "catalog");
  emit_fixtures(root / "fixtures");
  std::cout << "wrote catalog and fixtures under " << root << "\n";
  return 0;
}
