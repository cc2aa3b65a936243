// Fixed-capacity byte buffer.
#ifndef FIXTURE_DATA_H
#define FIXTURE_DATA_H

/* Storage grows by powers of two.
   The initial capacity is eight bytes. */

class Buffer {
public:
    int size() { return size_; }
    void clear() { size_ = 0; }
private:
    int size_;
    int capacity_;
};

static int default_capacity = 8;

#endif
