#pragma once

#include "torictop/cohomology.hpp"
#include "torictop/combinatorics.hpp"
#include "torictop/fans.hpp"
#include "torictop/lattice.hpp"

#include <json.hpp>

#include <string>

namespace torictop::json_io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; InvalidInput on I/O or syntax errors.
Json read_file(const std::string& path);

// {"m": int, "facets": [[int]]}
combinatorics::SimplicialComplex complex_from_json(const Json& j);
Json to_json(const combinatorics::SimplicialComplex& k);

// {"n", "rays", "faces", "weights": [{"face", "wp", "wm"}]}; weights optional.
fans::MultiFan fan_from_json(const Json& j);
Json to_json(const fans::MultiFan& f);

// Fan JSON plus "support".
lattice::MultiPolytope polytope_from_json(const Json& j);

// {"vertices": [[x, y]]} with integer or "p/q" string coordinates.
lattice::OrientedLoop loop_from_json(const Json& j);
Json to_json(const lattice::OrientedLoop& loop);

// {"elements": [{"name", "rank"}], "order": [[lo, hi]]}; lo/hi are names or indices.
combinatorics::SimplicialPoset poset_from_json(const Json& j);

// {"gens": [{"name", "deg"}], "rels": [[{"coef", "mono": [[gen, power]]}]]}
Json to_json(const cohomology::RingPresentation& p);

/// Integral values as JSON integers, others as "p/q" strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [{"u": [int], "c": int}], lexicographic in u.
Json to_json(const lattice::LaurentSum& s);

/// {"turns": r} plus "atan": [{"p", "q", "c"}] when not rational.
Json to_json(const lattice::TurnSum& t);

Json to_json(const IntMatrix& m);

}  // namespace torictop::json_io
