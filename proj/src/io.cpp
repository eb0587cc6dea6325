#include "polymatroid/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace pm {

namespace {

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t at = 0;
  while (true) {
    std::size_t next = line.find(sep, at);
    if (next == std::string::npos) {
      out.push_back(line.substr(at));
      break;
    }
    out.push_back(line.substr(at, next - at));
    at = next + 1;
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

int ground_size_for_entry_count(std::size_t count) {
  for (int n = 1; n <= kMaxGroundSize; ++n) {
    if ((1u << n) - 1 == count) return n;
  }
  throw FormatError("rank vector has " + std::to_string(count) +
                    " entries; expected 2^n - 1 for some n");
}

RankFunction parse_polymatroid_line(const std::string& line) {
  const auto fields = split_fields(line, ',');
  return parse_polymatroid_line(line,
                                GroundSet(ground_size_for_entry_count(fields.size())));
}

RankFunction parse_polymatroid_line(const std::string& line, const GroundSet& ground) {
  const auto fields = split_fields(line, ',');
  if (fields.size() + 1 != ground.subset_count())
    throw FormatError("rank vector has " + std::to_string(fields.size()) +
                      " entries; expected " +
                      std::to_string(ground.subset_count() - 1));
  const auto order = display_order(ground.size());
  std::vector<Rat> by_mask(ground.subset_count());
  for (std::size_t k = 0; k < fields.size(); ++k)
    by_mask[order[k].bits] = parse_rational(fields[k]);
  return RankFunction(ground, std::move(by_mask));
}

std::string format_polymatroid(const RankFunction& rank) {
  std::string out;
  bool first = true;
  for (const Rat& v : rank.display_values()) {
    if (!first) out += ", ";
    out += format_rational(v);
    first = false;
  }
  return out;
}

std::vector<RankFunction> read_polymatroid_file(std::istream& in) {
  std::vector<RankFunction> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (blank_or_comment(line)) continue;
    try {
      out.push_back(parse_polymatroid_line(line));
    } catch (const FormatError& err) {
      throw FormatError("line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return out;
}

LinearRepresentation read_linrep(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty representation file");
  int p = -1, d = -1;
  {
    std::istringstream hs(header);
    std::string magic, version, pfield, dfield;
    hs >> magic >> version >> pfield >> dfield;
    if (magic != "linrep" || version != "v1" || pfield.rfind("p=", 0) != 0 ||
        dfield.rfind("d=", 0) != 0)
      throw FormatError("bad representation header: " + header);
    try {
      p = std::stoi(pfield.substr(2));
      d = std::stoi(dfield.substr(2));
    } catch (const std::exception&) {
      throw FormatError("bad representation header: " + header);
    }
  }

  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<int>>> generators;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (blank_or_comment(line)) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw FormatError("representation line lacks 'label:': " + line);
    const std::string label = strip(line.substr(0, colon));
    if (label.empty()) throw FormatError("empty element label");
    std::vector<std::vector<int>> vecs;
    for (const std::string& chunk : split_fields(line.substr(colon + 1), ';')) {
      const std::string body = strip(chunk);
      if (body.empty()) continue;
      std::istringstream vs(body);
      std::vector<int> vec;
      int entry;
      while (vs >> entry) vec.push_back(entry);
      if (!vs.eof())
        throw FormatError("malformed generator vector '" + body + "'");
      if (static_cast<int>(vec.size()) != d)
        throw FormatError("generator vector has " + std::to_string(vec.size()) +
                          " entries; expected " + std::to_string(d));
      vecs.push_back(std::move(vec));
    }
    labels.push_back(label);
    generators.push_back(std::move(vecs));
  }
  if (labels.empty()) throw FormatError("representation file lists no elements");

  try {
    GroundSet ground(static_cast<int>(labels.size()), labels);
    return make_linear_representation(p, d, std::move(ground), std::move(generators));
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
}

void write_linrep(std::ostream& out, const LinearRepresentation& rep) {
  out << "linrep v1 p=" << rep.p << " d=" << rep.d << "\n";
  for (int i = 0; i < rep.ground.size(); ++i) {
    out << rep.ground.label(i) << ":";
    bool first_vec = true;
    for (const auto& v : rep.generators[static_cast<std::size_t>(i)]) {
      out << (first_vec ? " " : "; ");
      bool first_entry = true;
      for (int entry : v) {
        if (!first_entry) out << " ";
        out << entry;
        first_entry = false;
      }
      first_vec = false;
    }
    out << "\n";
  }
}

}  // namespace pm
