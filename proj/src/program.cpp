#include "mslp/program.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace mslp {

ProgramHeader ProgramHeader::of(const Field& field, uint32_t d) {
  return {d, field.p(), field.f(), field.modulus_packed()};
}

std::string ProgramStats::to_text() const {
  std::ostringstream out;
  out << "length=" << length << '\n'
      << "copies=" << copies << '\n'
      << "shows=" << shows << '\n'
      << "quota=" << quota << '\n'
      << "peak_slots=" << peak_slots << '\n';
  return out.str();
}

namespace {

void check_slot(Slot k, uint32_t quota, const char* what) {
  if (k < 1 || k > quota)
    throw Error(std::string("instruction references slot out of quota (") + what + ")");
}

void validate(const Instruction& I, uint32_t quota) {
  switch (I.op) {
    case Op::copy:
      check_slot(I.dst, quota, "copy dst");
      check_slot(I.a, quota, "copy src");
      break;
    case Op::mul:
      check_slot(I.dst, quota, "mul dst");
      check_slot(I.a, quota, "mul lhs");
      check_slot(I.b, quota, "mul rhs");
      break;
    case Op::inv:
      check_slot(I.dst, quota, "inv dst");
      check_slot(I.a, quota, "inv src");
      break;
    case Op::show: {
      if (I.slots.empty()) throw Error("show with empty slot list");
      std::set<Slot> seen;
      for (Slot k : I.slots) {
        check_slot(k, quota, "show");
        if (!seen.insert(k).second) throw Error("show lists a slot twice");
      }
      break;
    }
  }
}

}  // namespace

Program::Program(ProgramHeader header, uint32_t quota, std::vector<Instruction> instructions)
    : header_(header), quota_(quota), instructions_(std::move(instructions)) {
  if (quota_ == 0) throw Error("program quota must be positive");
  for (const Instruction& I : instructions_) validate(I, quota_);
}

size_t Program::length() const {
  size_t n = 0;
  for (const Instruction& I : instructions_)
    if (I.counted()) ++n;
  return n;
}

ProgramStats Program::stats() const {
  ProgramStats s;
  s.quota = quota_;
  std::set<Slot> touched;
  for (const Instruction& I : instructions_) {
    switch (I.op) {
      case Op::copy:
        ++s.copies;
        touched.insert(I.dst);
        touched.insert(I.a);
        break;
      case Op::mul:
        ++s.length;
        touched.insert(I.dst);
        touched.insert(I.a);
        touched.insert(I.b);
        break;
      case Op::inv:
        ++s.length;
        touched.insert(I.dst);
        touched.insert(I.a);
        break;
      case Op::show:
        ++s.shows;
        touched.insert(I.slots.begin(), I.slots.end());
        break;
    }
  }
  s.peak_slots = static_cast<uint32_t>(touched.size());
  return s;
}

std::string Program::serialize() const {
  std::ostringstream out;
  out << "MSLP v1\n";
  out << "b=" << quota_ << " d=" << header_.d << " p=" << header_.p << " f=" << header_.f
      << " mod=" << header_.modulus_packed << '\n';
  for (const Instruction& I : instructions_) {
    switch (I.op) {
      case Op::copy:
        out << 'm' << I.dst << " <- m" << I.a << '\n';
        break;
      case Op::mul:
        out << 'm' << I.dst << " <- m" << I.a << " * m" << I.b << '\n';
        break;
      case Op::inv:
        out << 'm' << I.dst << " <- inv m" << I.a << '\n';
        break;
      case Op::show: {
        out << "show ";
        for (size_t i = 0; i < I.slots.size(); ++i) {
          if (i) out << ',';
          out << I.slots[i];
        }
        out << '\n';
        break;
      }
    }
  }
  return out.str();
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  return start == std::string::npos ? std::string() : s.substr(start);
}

Slot parse_slot(const std::string& tok, size_t line) {
  if (tok.size() < 2 || tok[0] != 'm') throw ParseError(line, "expected slot token 'm<k>'");
  for (size_t i = 1; i < tok.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError(line, "malformed slot token '" + tok + "'");
  unsigned long v = std::stoul(tok.substr(1));
  if (v < 1) throw ParseError(line, "slot indices start at 1");
  return static_cast<Slot>(v);
}

uint64_t parse_kv(const std::string& tok, const char* key, size_t line) {
  std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw ParseError(line, std::string("expected '") + key + "=<value>'");
  try {
    return std::stoull(tok.substr(prefix.size()));
  } catch (...) {
    throw ParseError(line, std::string("bad value for '") + key + "'");
  }
}

}  // namespace

Program Program::parse(std::istream& in) {
  std::string line;
  size_t line_no = 0;
  auto next_meaningful = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      out = strip(line);
      if (!out.empty()) return true;
    }
    return false;
  };

  std::string s;
  if (!next_meaningful(s)) throw ParseError(line_no, "empty program file");
  if (s != "MSLP v1") throw ParseError(line_no, "expected 'MSLP v1' magic");
  if (!next_meaningful(s)) throw ParseError(line_no, "missing header line");
  std::istringstream hs(s);
  std::string tb, td, tp, tf, tmod;
  if (!(hs >> tb >> td >> tp >> tf >> tmod))
    throw ParseError(line_no, "header needs b= d= p= f= mod=");
  ProgramHeader header;
  uint32_t quota = static_cast<uint32_t>(parse_kv(tb, "b", line_no));
  header.d = static_cast<uint32_t>(parse_kv(td, "d", line_no));
  header.p = static_cast<uint32_t>(parse_kv(tp, "p", line_no));
  header.f = static_cast<uint32_t>(parse_kv(tf, "f", line_no));
  header.modulus_packed = parse_kv(tmod, "mod", line_no);

  std::vector<Instruction> instrs;
  while (next_meaningful(s)) {
    std::istringstream ls(s);
    std::string tok;
    ls >> tok;
    if (tok == "show") {
      std::string rest;
      std::getline(ls, rest);
      std::vector<Slot> slots;
      std::string cur;
      for (char c : rest) {
        if (c == ',') {
          if (cur.empty()) throw ParseError(line_no, "empty entry in show list");
          slots.push_back(static_cast<Slot>(std::stoul(cur)));
          cur.clear();
        } else if (isdigit(static_cast<unsigned char>(c))) {
          cur += c;
        } else if (c == ' ' || c == '\t') {
          // spaces allowed around entries
        } else {
          throw ParseError(line_no, "bad character in show list");
        }
      }
      if (!cur.empty()) slots.push_back(static_cast<Slot>(std::stoul(cur)));
      if (slots.empty()) throw ParseError(line_no, "show needs at least one slot");
      for (Slot k : slots)
        if (k < 1) throw ParseError(line_no, "slot indices start at 1");
      instrs.push_back(Instruction::show_of(std::move(slots)));
      continue;
    }
    Slot dst = parse_slot(tok, line_no);
    std::string arrow;
    if (!(ls >> arrow) || arrow != "<-") throw ParseError(line_no, "expected '<-'");
    std::string t1;
    if (!(ls >> t1)) throw ParseError(line_no, "missing operand");
    if (t1 == "inv") {
      std::string t2;
      if (!(ls >> t2)) throw ParseError(line_no, "inv needs an operand");
      Slot src = parse_slot(t2, line_no);
      if (ls >> t2) throw ParseError(line_no, "trailing tokens");
      instrs.push_back(Instruction::inv_of(dst, src));
      continue;
    }
    Slot a = parse_slot(t1, line_no);
    std::string t2;
    if (!(ls >> t2)) {
      instrs.push_back(Instruction::copy_of(dst, a));
      continue;
    }
    if (t2 != "*") throw ParseError(line_no, "expected '*' or end of line");
    std::string t3;
    if (!(ls >> t3)) throw ParseError(line_no, "mul needs a second operand");
    Slot b = parse_slot(t3, line_no);
    if (ls >> t3) throw ParseError(line_no, "trailing tokens");
    instrs.push_back(Instruction::mul_of(dst, a, b));
  }

  try {
    return Program(header, quota, std::move(instrs));
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

Program Program::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Program concat(const Program& s1, const Program& s2) {
  if (!(s1.header() == s2.header())) throw Error("concat: program headers differ");
  std::vector<Instruction> instrs = s1.instructions();
  instrs.insert(instrs.end(), s2.instructions().begin(), s2.instructions().end());
  return Program(s1.header(), std::max(s1.quota(), s2.quota()), std::move(instrs));
}

}  // namespace mslp
