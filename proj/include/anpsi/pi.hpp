#ifndef ANPSI_PI_HPP
#define ANPSI_PI_HPP

#include "anpsi/instance.hpp"
#include "anpsi/process.hpp"

namespace anpsi {

struct UnsupportedConstruct : std::runtime_error {
  explicit UnsupportedConstruct(const std::string& what) : std::runtime_error(what) {}
};

/// Small pi-calculus AST: plain names as channels and objects, monadic
/// communication, binary choice. Used as the encoding source for the
/// pi instance and by the test-side reducer.
class PiProc {
 public:
  enum class Kind : uint8_t { Nil, Out, In, Sum, Par, Nu, Rep };

  PiProc();  // Nil

  static PiProc nil();
  static PiProc out(Name chan, Name obj, PiProc cont);
  static PiProc in(Name chan, Name var, PiProc cont);
  static PiProc sum(PiProc left, PiProc right);
  static PiProc par(PiProc left, PiProc right);
  static PiProc nu(Name n, PiProc body);
  static PiProc rep(PiProc body);

  Kind kind() const;
  Name chan() const;
  Name obj() const;   // Out
  Name var() const;   // In
  Name bound() const; // Nu
  const PiProc& left() const;
  const PiProc& right() const;
  const PiProc& body() const;  // In/Out continuation, Nu/Rep body

 private:
  struct Node;
  explicit PiProc(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Example-1 instance: terms are names, the only assertion is the unit,
/// conditions are name equalities entailed exactly when the names coincide.
/// condition_sample covers all equality pairs over `universe`.
InstanceSignature make_pi_instance(const std::vector<Name>& universe);

/// Encoding into psi: a(x).P becomes a(λx)x.P; P+Q becomes
/// case top=top:P [] top=top:Q for the designated name `top`.
Process encode_pi(const PiProc& p, Name top);

}  // namespace anpsi

#endif
