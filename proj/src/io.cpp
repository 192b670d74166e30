#include "minionlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace minionlab {

ParseError::ParseError(const std::string& what, unsigned line_no)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
      line(line_no) {}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

char to_hex(unsigned v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

BoolFn read_function(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing arity line", 1);
  if (line.rfind("arity=", 0) != 0)
    throw ParseError("expected \"arity=<n>\"", 1);
  unsigned arity = 0;
  try {
    arity = static_cast<unsigned>(std::stoul(line.substr(6)));
  } catch (...) {
    throw ParseError("bad arity value", 1);
  }
  if (arity == 0 || arity > BoolFn::arity_cap())
    throw ParseError("arity out of range", 1);
  std::string hex;
  if (!std::getline(in, hex)) throw ParseError("missing table line", 2);
  while (!hex.empty() && (hex.back() == '\r' || hex.back() == ' '))
    hex.pop_back();
  BoolFn f(arity);
  std::uint64_t nibbles = (f.size() + 3) / 4;
  if (hex.size() != nibbles)
    throw ParseError("expected " + std::to_string(nibbles) + " hex digits", 2);
  for (std::uint64_t i = 0; i < nibbles; ++i) {
    int v = hex_digit(hex[hex.size() - 1 - i]);
    if (v < 0) throw ParseError("invalid hex digit", 2);
    for (unsigned b = 0; b < 4; ++b) {
      std::uint64_t idx = 4 * i + b;
      if (idx < f.size() && ((v >> b) & 1)) f.set(idx, true);
    }
    if (f.size() < 4 && (v >> f.size()) != 0)
      throw ParseError("table bits beyond 2^arity", 2);
  }
  return f;
}

BoolFn read_function_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_function(in);
}

void write_function(std::ostream& out, const BoolFn& f) {
  out << "arity=" << f.arity() << "\n";
  std::uint64_t nibbles = (f.size() + 3) / 4;
  std::string hex(nibbles, '0');
  for (std::uint64_t i = 0; i < nibbles; ++i) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      std::uint64_t idx = 4 * i + b;
      if (idx < f.size() && f.get(idx)) v |= 1u << b;
    }
    hex[nibbles - 1 - i] = to_hex(v);
  }
  out << hex << "\n";
}

std::string function_to_string(const BoolFn& f) {
  std::ostringstream ss;
  write_function(ss, f);
  return ss.str();
}

namespace {

Relation parse_relation(const std::string& body, unsigned k, unsigned line_no) {
  Relation r{k, 0};
  std::istringstream ss(body);
  std::string tok;
  while (ss >> tok) {
    if (tok.size() != k)
      throw ParseError("bitstring length != pair arity", line_no);
    unsigned tv = 0;
    for (unsigned i = 0; i < k; ++i) {
      if (tok[i] == '1')
        tv |= 1u << i;
      else if (tok[i] != '0')
        throw ParseError("bitstring must be over {0,1}", line_no);
    }
    r.tuples |= std::uint64_t(1) << tv;
  }
  return r;
}

}  // namespace

Template read_template(std::istream& in) {
  Template t;
  std::string line;
  unsigned line_no = 0;
  unsigned k = 0;
  int state = 0;  // 0: want pair, 1: want A, 2: want B
  Relation a;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("pair", 0) == 0) {
      if (state != 0) throw ParseError("incomplete pair block", line_no);
      auto eq = line.find("k=");
      if (eq == std::string::npos)
        throw ParseError("expected \"pair k=<k>\"", line_no);
      try {
        k = static_cast<unsigned>(std::stoul(line.substr(eq + 2)));
      } catch (...) {
        throw ParseError("bad arity value", line_no);
      }
      if (k == 0 || k > Relation::kMaxArity)
        throw ParseError("pair arity out of range", line_no);
      state = 1;
    } else if (line.rfind("A:", 0) == 0) {
      if (state != 1) throw ParseError("A: outside a pair block", line_no);
      a = parse_relation(line.substr(2), k, line_no);
      state = 2;
    } else if (line.rfind("B:", 0) == 0) {
      if (state != 2) throw ParseError("B: outside a pair block", line_no);
      t.pairs.push_back({a, parse_relation(line.substr(2), k, line_no)});
      state = 0;
    } else {
      throw ParseError("unrecognized directive", line_no);
    }
  }
  if (state != 0) throw ParseError("incomplete pair block", line_no);
  t.validate();
  return t;
}

Template read_template_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_template(in);
}

void write_template(std::ostream& out, const Template& t) {
  for (const auto& p : t.pairs) {
    out << "pair k=" << p.A.k << "\n";
    for (const Relation* r : {&p.A, &p.B}) {
      out << (r == &p.A ? "A:" : "B:");
      for (unsigned tv : r->members()) {
        out << ' ';
        for (unsigned i = 0; i < r->k; ++i) out << char('0' + ((tv >> i) & 1));
      }
      out << "\n";
    }
  }
}

Instance read_instance(std::istream& in, const Template& t) {
  Instance inst;
  std::string line;
  unsigned line_no = 0;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "vars") {
      if (!(ss >> inst.num_vars)) throw ParseError("bad vars count", line_no);
      have_vars = true;
    } else if (head == "c") {
      if (!have_vars) throw ParseError("vars must come first", line_no);
      Constraint con;
      unsigned pair1;
      if (!(ss >> pair1) || pair1 == 0 || pair1 > t.pairs.size())
        throw ParseError("bad pair index", line_no);
      con.pair_index = pair1 - 1;
      unsigned k = t.pairs[con.pair_index].A.k;
      for (unsigned i = 0; i < k; ++i) {
        unsigned v;
        if (!(ss >> v) || v == 0 || v > inst.num_vars)
          throw ParseError("bad variable id", line_no);
        con.scope.push_back(v - 1);
      }
      unsigned extra;
      if (ss >> extra) throw ParseError("trailing tokens", line_no);
      inst.constraints.push_back(std::move(con));
    } else {
      throw ParseError("unrecognized directive", line_no);
    }
  }
  if (!have_vars) throw ParseError("missing vars line", line_no ? line_no : 1);
  return inst;
}

Instance read_instance_file(const std::string& path, const Template& t) {
  auto in = open_or_throw(path);
  return read_instance(in, t);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "vars " << inst.num_vars << "\n";
  for (const auto& c : inst.constraints) {
    out << "c " << c.pair_index + 1;
    for (unsigned v : c.scope) out << ' ' << v + 1;
    out << "\n";
  }
}

VarMap parse_varmap(const std::string& text) {
  VarMap pi;
  std::istringstream ss(text);
  std::string tok;
  unsigned max_out = 0;
  while (std::getline(ss, tok, ',')) {
    unsigned v;
    try {
      v = static_cast<unsigned>(std::stoul(tok));
    } catch (...) {
      throw std::invalid_argument("bad map entry: " + tok);
    }
    if (v == 0) throw std::invalid_argument("map entries are 1-based");
    pi.image.push_back(v - 1);
    max_out = std::max(max_out, v);
  }
  pi.from_arity = static_cast<unsigned>(pi.image.size());
  pi.to_arity = max_out;
  pi.validate();
  return pi;
}

std::string varmap_to_string(const VarMap& pi) {
  std::string s;
  for (unsigned i = 0; i < pi.image.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pi.image[i] + 1);
  }
  return s;
}

LabelCover read_labelcover(std::istream& in) {
  LabelCover lc;
  std::string line;
  unsigned line_no = 0;
  bool have_sigma = false;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "sigma") {
      if (!(ss >> lc.sigma) || lc.sigma == 0)
        throw ParseError("bad sigma", line_no);
      have_sigma = true;
    } else if (head == "edge") {
      if (!have_sigma) throw ParseError("sigma must come first", line_no);
      unsigned u1, v1;
      std::string map_text;
      if (!(ss >> u1 >> v1 >> map_text) || u1 == 0 || v1 == 0)
        throw ParseError("expected \"edge <u> <v> <map>\"", line_no);
      VarMap pi;
      try {
        pi = parse_varmap(map_text);
        pi.to_arity = lc.sigma;  // labels range over [sigma]
        pi.validate();
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line_no);
      }
      if (pi.from_arity != 2 * lc.sigma || !pi.is_two_to_one())
        throw ParseError("projection is not 2-to-1 onto [sigma]", line_no);
      lc.num_left = std::max(lc.num_left, u1);
      lc.num_right = std::max(lc.num_right, v1);
      lc.edges.push_back({u1 - 1, v1 - 1, std::move(pi)});
    } else {
      throw ParseError("unrecognized directive", line_no);
    }
  }
  if (!have_sigma) throw ParseError("missing sigma line", line_no ? line_no : 1);
  lc.validate();
  return lc;
}

LabelCover read_labelcover_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_labelcover(in);
}

void write_labelcover(std::ostream& out, const LabelCover& lc) {
  out << "sigma " << lc.sigma << "\n";
  for (const auto& e : lc.edges)
    out << "edge " << e.u + 1 << ' ' << e.v + 1 << ' '
        << varmap_to_string(e.proj) << "\n";
}

}  // namespace minionlab
