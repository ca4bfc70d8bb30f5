// Input documents: the text format naming the objects a command operates on.
//
//   # comment, runs to end of line
//   ring x, y;                      exactly one, before any object using it
//   param a = 2;                    exact rational; `param a;` defers the value
//   weights 2, 3;                   one positive weight per ring variable
//   poly Phi = x^3 - y^2;
//   vfield xi1 = (2*x, 3*y);        one component per ring variable
//   variety V = Phi with xi1, xi2;  equations by name: Phi or (P1, P2)
//   deform F = y^2 + x^4 + t*x^5;   over the ring variables plus t
//   arc g = (s, s^3, 0) trunc 50;   components in s; trunc clause optional
//   samples S = 0, 1/7, 1/3;        distinct rationals containing 0
//
// Names live in one namespace (parameters, ring variables and objects all
// collide); `t` and `s` are reserved. Statements end with `;`. References
// resolve to earlier declarations. An object whose expression mentions a
// deferred parameter parses but is unavailable until the parameter gets a
// value; using it is an error naming the parameter.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "germinv/families.hpp"

namespace germinv {

struct DocVariety {
  std::vector<std::string> equations;  // names of polys
  std::vector<std::string> fields;     // names of vfields
};

struct DocArc {
  std::vector<Polynomial> components;  // over the one-variable arc ring (s)
  std::optional<long> trunc;           // explicit trunc clause, if any
};

struct Document {
  RingPtr ring;     // the declared x ring
  RingPtr xt_ring;  // ring plus the deformation parameter t (t last)
  RingPtr arc_ring; // the one-variable ring in s

  std::map<std::string, Rational> params;
  std::set<std::string> deferred_params;
  std::optional<WeightSystem> weights;

  std::map<std::string, Polynomial> polys;
  std::map<std::string, VectorField> vfields;
  std::map<std::string, DocVariety> varieties;
  std::map<std::string, Polynomial> deforms;  // over xt_ring, validated
  std::map<std::string, DocArc> arcs;
  std::map<std::string, SampleSet> samplesets;

  // Objects that parsed but mention a deferred parameter: name -> message.
  std::map<std::string, std::string> unavailable;

  std::vector<std::string> arc_order;      // arcs in declaration order
  std::vector<std::string> sampleset_order;
};

// Parses a whole document. Syntax problems, duplicate or reserved names,
// unresolved references and malformed literals raise ParseError with the
// position; invariant violations in otherwise well-formed objects (a
// deformation not vanishing at the origin, an arc with a constant term, a
// bad sample set) raise MathError.
Document parse_document(const std::string& text);

// Accessors resolving a name for a command. An unknown name raises
// UsageError; a name that is unavailable because of a deferred parameter
// raises MathError with the recorded message.
const Polynomial& doc_poly(const Document& d, const std::string& name);
VectorField doc_vfield(const Document& d, const std::string& name);
VarietyGerm doc_variety(const Document& d, const std::string& name);
Deformation doc_deformation(const Document& d, const std::string& name);
Arc doc_arc(const Document& d, const std::string& name, long default_trunc);
SampleSet doc_samples(const Document& d, const std::string& name);

}  // namespace germinv
