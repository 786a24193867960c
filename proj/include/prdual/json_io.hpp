#pragma once

#include <json.hpp>

#include "prdual/duality.hpp"
#include "prdual/matrix.hpp"
#include "prdual/oracle.hpp"
#include "prdual/rado.hpp"
#include "prdual/transfer.hpp"

namespace prdual {

using json = nlohmann::json;

// Rationals travel as strings ("p" or "p/q"); matrices as arrays of rows.
void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const QMatrix& m);
void from_json(const json& j, QMatrix& m);

void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const ColumnsCertificate& c);
void from_json(const json& j, ColumnsCertificate& c);

void to_json(json& j, const ProjectorResult& p);
void from_json(const json& j, ProjectorResult& p);
void to_json(json& j, const DependencyResult& d);
void from_json(const json& j, DependencyResult& d);

void to_json(json& j, const DeuberBlock& b);
void from_json(const json& j, DeuberBlock& b);
void to_json(json& j, const ContainmentMeta& m);
void from_json(const json& j, ContainmentMeta& m);

void to_json(json& j, const PRWitness& w);
void from_json(const json& j, PRWitness& w);

}  // namespace prdual
