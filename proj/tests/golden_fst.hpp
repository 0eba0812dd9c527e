#pragma once

// A published 20-state transducer used as a fixed oracle for the transducer
// run semantics. Column order follows the symbol alphabet.
inline constexpr const char* kGoldenFstText =
    "n_states,20\n"
    "transition\n"
    "state,a,ab,ba,b,bc,cb,c,cd,dc,d\n"
    "S0,S8,S2,S19,S9,S1,S14,S11,S7,S18,S18\n"
    "S1,S9,S17,S4,S5,S3,S2,S14,S12,S2,S10\n"
    "S2,S9,S18,S1,S10,S3,S9,S16,S4,S1,S3\n"
    "S3,S15,S9,S15,S0,S16,S13,S14,S17,S16,S2\n"
    "S4,S0,S0,S17,S8,S7,S9,S3,S6,S6,S13\n"
    "S5,S14,S12,S9,S0,S14,S16,S6,S3,S3,S8\n"
    "S6,S1,S14,S12,S19,S3,S1,S16,S1,S3,S13\n"
    "S7,S17,S19,S4,S19,S3,S10,S6,S5,S15,S15\n"
    "S8,S12,S6,S5,S13,S16,S1,S4,S14,S16,S3\n"
    "S9,S3,S19,S4,S19,S11,S1,S2,S15,S16,S8\n"
    "S10,S7,S9,S19,S6,S16,S7,S11,S15,S7,S6\n"
    "S11,S4,S13,S19,S18,S10,S8,S19,S15,S2,S12\n"
    "S12,S19,S1,S6,S14,S11,S9,S3,S18,S3,S10\n"
    "S13,S10,S11,S10,S11,S7,S8,S3,S15,S17,S6\n"
    "S14,S9,S16,S0,S3,S4,S3,S8,S15,S5,S3\n"
    "S15,S13,S13,S3,S6,S9,S8,S3,S7,S18,S6\n"
    "S16,S18,S6,S2,S5,S0,S14,S10,S14,S11,S4\n"
    "S17,S9,S16,S4,S6,S7,S6,S13,S7,S9,S4\n"
    "S18,S1,S12,S19,S6,S2,S9,S0,S0,S5,S10\n"
    "S19,S13,S2,S15,S18,S14,S0,S18,S2,S12,S0\n"
    "output\n"
    "state,a,ab,ba,b,bc,cb,c,cd,dc,d\n"
    "S0,OA,OB,OB,OB,OA,A,MTC,M,OB,OB\n"
    "S1,OA,MTC,OB,MTC,MTC,M,M,M,OB,M\n"
    "S2,OB,OA,MTC,OA,MTC,M,OB,M,OA,A\n"
    "S3,M,OA,OA,A,M,MTC,OB,M,OB,OB\n"
    "S4,M,MTC,A,OB,M,OB,OA,OB,MTC,OB\n"
    "S5,M,A,M,OA,M,OA,A,A,MTC,A\n"
    "S6,A,M,OA,MTC,MTC,OA,OB,OA,M,A\n"
    "S7,OA,M,M,OB,M,A,M,OA,MTC,M\n"
    "S8,OA,OB,MTC,MTC,OA,OB,MTC,MTC,M,M\n"
    "S9,OA,OA,A,A,MTC,MTC,MTC,M,OA,MTC\n"
    "S10,OA,A,OA,OA,OB,A,MTC,OA,A,OA\n"
    "S11,MTC,OB,OB,OB,A,MTC,M,A,MTC,OA\n"
    "S12,M,M,M,MTC,OA,A,OB,MTC,MTC,OB\n"
    "S13,OA,MTC,M,M,OA,MTC,OB,OB,OA,OA\n"
    "S14,A,MTC,MTC,MTC,MTC,OA,OB,M,MTC,M\n"
    "S15,M,OB,OB,A,MTC,A,OB,MTC,A,OB\n"
    "S16,OA,MTC,A,MTC,MTC,OB,M,MTC,OA,OA\n"
    "S17,A,OA,A,OA,M,OA,OB,OB,M,M\n"
    "S18,A,MTC,OB,OA,MTC,A,OB,MTC,OB,OA\n"
    "S19,A,MTC,A,A,OA,OB,MTC,A,OA,MTC\n";
