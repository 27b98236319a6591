#include "anpsi/pi.hpp"

namespace anpsi {

struct PiProc::Node {
  Kind kind = Kind::Nil;
  Name chan, obj, var, bound;
  PiProc lhs, rhs, sub;
};

// Null node means Nil (Node members would recursively default-construct).
PiProc::PiProc() = default;

PiProc PiProc::nil() { return PiProc(); }

PiProc PiProc::out(Name chan, Name obj, PiProc cont) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Out;
  n->chan = chan;
  n->obj = obj;
  n->sub = std::move(cont);
  return PiProc(std::move(n));
}

PiProc PiProc::in(Name chan, Name var, PiProc cont) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::In;
  n->chan = chan;
  n->var = var;
  n->sub = std::move(cont);
  return PiProc(std::move(n));
}

PiProc PiProc::sum(PiProc left, PiProc right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->lhs = std::move(left);
  n->rhs = std::move(right);
  return PiProc(std::move(n));
}

PiProc PiProc::par(PiProc left, PiProc right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Par;
  n->lhs = std::move(left);
  n->rhs = std::move(right);
  return PiProc(std::move(n));
}

PiProc PiProc::nu(Name name, PiProc body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nu;
  n->bound = name;
  n->sub = std::move(body);
  return PiProc(std::move(n));
}

PiProc PiProc::rep(PiProc body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rep;
  n->sub = std::move(body);
  return PiProc(std::move(n));
}

PiProc::Kind PiProc::kind() const { return node_ ? node_->kind : Kind::Nil; }
Name PiProc::chan() const { return node_->chan; }
Name PiProc::obj() const { return node_->obj; }
Name PiProc::var() const { return node_->var; }
Name PiProc::bound() const { return node_->bound; }
const PiProc& PiProc::left() const { return node_->lhs; }
const PiProc& PiProc::right() const { return node_->rhs; }
const PiProc& PiProc::body() const { return node_->sub; }

InstanceSignature make_pi_instance(const std::vector<Name>& universe) {
  InstanceSignature sig;
  sig.channel_eq = [](const Term& m, const Term& k) { return Condition::term_eq(m, k); };
  sig.entails = [](const Assertion&, const Condition& c) {
    // The unit entails exactly the reflexive equalities; executed-action
    // atoms never hold in this instance.
    if (!c.done_patterns().empty()) return false;
    for (const auto& eq : c.equalities())
      if (!(eq.lhs == eq.rhs)) return false;
    return true;
  };
  sig.compose = [](const Assertion&, const Assertion&) { return Assertion{}; };
  sig.unit = Assertion{};
  for (Name a : universe)
    for (Name b : universe)
      sig.condition_sample.push_back(Condition::term_eq(Term::leaf(a), Term::leaf(b)));
  return sig;
}

Process encode_pi(const PiProc& p, Name top) {
  switch (p.kind()) {
    case PiProc::Kind::Nil:
      return Process::nil();
    case PiProc::Kind::Out:
      return Process::output(Term::leaf(p.chan()), Term::leaf(p.obj()),
                             encode_pi(p.body(), top));
    case PiProc::Kind::In: {
      Name x = p.var();
      if (x.sort != Sort::Var)
        throw UnsupportedConstruct("pi input binder must be variable-sorted");
      return Process::input(Term::leaf(p.chan()), {x}, Term::leaf(x),
                            encode_pi(p.body(), top));
    }
    case PiProc::Kind::Sum: {
      Condition truth = Condition::term_eq(Term::leaf(top), Term::leaf(top));
      std::vector<Process::Branch> branches;
      branches.push_back({truth, encode_pi(p.left(), top)});
      branches.push_back({truth, encode_pi(p.right(), top)});
      return Process::choice(std::move(branches));
    }
    case PiProc::Kind::Par:
      return Process::par(encode_pi(p.left(), top), encode_pi(p.right(), top));
    case PiProc::Kind::Nu:
      return Process::restrict(p.bound(), encode_pi(p.body(), top));
    case PiProc::Kind::Rep:
      return Process::repl(encode_pi(p.body(), top));
  }
  throw UnsupportedConstruct("unknown pi construct");
}

}  // namespace anpsi
