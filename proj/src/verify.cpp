namespace seqop {}
