#include <string_view>

#include "alexcalc/catalog.hpp"

namespace alexcalc {

namespace {

constexpr std::string_view kBuiltin = R"cat(# Blocks: compact spaces with boundary.
block D3 boundary=S2 fixed=0 quotient=none note="closed 3-ball"
block K(P2) boundary=P2 sites=apex fixed=1 quotient=branched dcover=D3 note="cone over P2, quotient of D3 by the antipodal map on rays"
block B(pt) boundary=Kl sites=p1,p2 fixed=2 quotient=branched dcover=D2xS1 note="D2xS1/alpha, alpha(x,z)=(-x,conj z)"
block B(S2) boundary=S2 sites=s1,s2 fixed=2 quotient=branched dcover=S2xI note="S2x[-1,1]/(sigma,-id), sigma the suspended antipodal map of S1"
block B(S4) boundary=T2 sites=s1,s2,s3,s4 fixed=4 quotient=branched dcover=T2xI note="T2x[-1,1]/(conj,conj,-id)"
block geminus boundary=P2,P2,Kl fixed=2 quotient=punctured dcover=D2xS1 note="tau(x,z)=(-x,conj z) on D2xS1"
block dipus boundary=P2,P2,Kl fixed=2 quotient=punctured dcover=KlxI~o note="tau[z1,z2,t]=[-conj z1,-z2,t] on the orientable I-bundle over Kl"
block bipod boundary=P2,P2 fixed=2 quotient=punctured dcover=HW note="tau on the two halves W1, W2 of the Hantzsche-Wendt manifold"
block quadripus boundary=P2,P2,P2,P2,T2 fixed=4 quotient=punctured dcover=T2xI note="tau(z1,z2,t)=(conj z1,conj z2,-t)"
block tetrapod boundary=P2,P2,P2,P2 fixed=4 quotient=punctured dcover=MT(-I) note="tau[z1,z2,t]=[-conj z1,conj z2,-t] on the mapping torus of -I"
block octopod boundary=P2,P2,P2,P2,P2,P2,P2,P2 fixed=8 quotient=punctured dcover=T3 note="tau(z1,z2,z3)=(conj z1,conj z2,conj z3)"

# Closed manifolds.
atom S3 h1=0 gens= flags=prime,irreducible,simply_connected,!has_nonseparating_p2,orientable
atom S2xS1 h1=Z gens=t flags=prime,!irreducible,!simply_connected,!has_nonseparating_p2,orientable
atom S2~S1 h1=Z gens=t w1=t ocover=S2xS1 flags=prime,!irreducible,!simply_connected,!has_nonseparating_p2,!orientable note="non-orientable S2 bundle over S1"
atom T3 h1=Z^3 gens=a,b,c rels="a.b.a'.b',a.c.a'.c',b.c.b'.c'" flags=prime,irreducible,!simply_connected,!has_nonseparating_p2,orientable
atom HW h1=Z/4+Z/4 gens=x,y rels="x.y.y.x'.y.y,y.x.x.y'.x.x" flags=prime,irreducible,!simply_connected,!has_nonseparating_p2,orientable note="Hantzsche-Wendt manifold"
atom MT(-I) h1=Z+Z/2+Z/2 gens=a,b,t rels="a.b.a'.b',t.a.t'.a,t.b.t'.b" flags=prime,irreducible,!simply_connected,!has_nonseparating_p2,orientable note="mapping torus of -I on T2"

# Closed spaces with singular points.
atom Susp(P2) sites=north,south h1=Z/2 image.north=1 image.south=1 gens=a rels="a.a" w1=a word.north=a word.south=a blacks= edges=north-south cover=S3 flags=prime,irreducible,simply_connected,!has_nonseparating_p2,!orientable note="K(P2) glued to K(P2)"
atom T3/beta sites=v000,v001,v010,v011,v100,v101,v110,v111 h1=Z/2+Z/2+Z/2+Z/2 image.v000=0,0,0,1 image.v001=0,0,1,1 image.v010=0,1,0,1 image.v011=0,1,1,1 image.v100=1,0,0,1 image.v101=1,0,1,1 image.v110=1,1,0,1 image.v111=1,1,1,1 gens=t1,t2,t3,s rels="t1.t2.t1'.t2',t1.t3.t1'.t3',t2.t3.t2'.t3',s.s,s.t1.s.t1,s.t2.s.t2,s.t3.s.t3" w1=s word.v000=s word.v001=t3.s word.v010=t2.s word.v011=t2.t3.s word.v100=t1.s word.v101=t1.t3.s word.v110=t1.t2.s word.v111=t1.t2.t3.s blacks=c edges=c-v000,c-v001,c-v010,c-v011,c-v100,c-v101,c-v110,c-v111 cover=T3 flags=prime,irreducible,simply_connected,!has_nonseparating_p2,!orientable note="capped octopod, beta(x)=-x on T3"
atom capped-bipod sites=p1,p2 blacks=c edges=c-p1,c-p2 cover=HW flags=prime,irreducible,!simply_connected,!has_nonseparating_p2,!orientable note="bipod capped with two cones"
atom capped-tetrapod sites=p1,p2,p3,p4 blacks=c edges=c-p1,c-p2,c-p3,c-p4 cover=MT(-I) flags=prime,irreducible,!simply_connected,!has_nonseparating_p2,!orientable note="tetrapod capped with four cones"
atom Qa sites=q1,q3,q4,j blacks=a edges=a-q1,a-q3,a-q4,a-j flags=prime,irreducible,!has_nonseparating_p2,!orientable note="irreducible factor of Q carrying three free sites"
atom Qb sites=j,q2 blacks=b edges=b-j,b-q2 flags=prime,irreducible,!has_nonseparating_p2,!orientable note="irreducible factor of Q carrying one free site"
alias Q expr="Qa #^{j,j} Qb" note="space with one essential separating P2 and four singular points"
)cat";

}  // namespace

std::string_view builtin_catalog_text() { return kBuiltin; }

}  // namespace alexcalc
